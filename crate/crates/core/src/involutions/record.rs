use std::fmt;

use num_traits::Zero;

use crate::exactpoly::linalg::det3;
use crate::exactpoly::{HPoly, Rat};
use crate::fixedcurve::FixedCurveInvariant;
use crate::projmaps::{MapValue, ProjPoint, RationalMap};

use super::bertini::BertiniInvolution;
use super::dj::DjData;
use super::geiser::GeiserInvolution;
use super::{InvolutionError, PointConfig};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum InvolutionKind {
    DeJonquieres(u32),
    Geiser,
    Bertini,
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionKind::DeJonquieres(d) => write!(f, "DJ({d})"),
            InvolutionKind::Geiser => f.write_str("Geiser"),
            InvolutionKind::Bertini => f.write_str("Bertini"),
        }
    }
}

/// How a record computes images of points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Evaluator {
    /// Evaluate the closed-form map.
    Map,
    Geiser(GeiserInvolution),
    Bertini(BertiniInvolution),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvolutionRecord {
    pub kind: InvolutionKind,
    pub map: Option<RationalMap>,
    pub evaluator: Evaluator,
    /// DJ: the input curve; Geiser: the Jacobian sextic; Bertini: none.
    pub fixed_curve: Option<HPoly>,
    pub invariant: FixedCurveInvariant,
    pub seed: u64,
    pub dj: Option<DjData>,
}

impl InvolutionRecord {
    pub fn eval(&self, x: &ProjPoint) -> Result<ProjPoint, InvolutionError> {
        match &self.evaluator {
            Evaluator::Map => match self.map.as_ref().map(|m| m.eval(x)) {
                Some(MapValue::Point(p)) => Ok(p),
                _ => Err(InvolutionError::BasePointInput),
            },
            Evaluator::Geiser(g) => g.eval(x),
            Evaluator::Bertini(b) => b.eval(x),
        }
    }

    pub fn degree(&self) -> Option<u32> {
        match (&self.map, self.kind) {
            (Some(m), _) => Some(m.degree()),
            (None, InvolutionKind::Geiser) => Some(8),
            (None, InvolutionKind::Bertini) => Some(17),
            (None, InvolutionKind::DeJonquieres(d)) => Some(d),
        }
    }
}

/// The DJ involution with center `p` fixing the curve `c` pointwise.
///
/// With `trusted`, the resultant search for extra singular points is skipped;
/// the remaining checks still run.
pub fn dj_involution(c: &HPoly, p: &ProjPoint, trusted: bool) -> Result<InvolutionRecord, InvolutionError> {
    let data = DjData::new(c, p, trusted)?;
    let map = data.map()?;
    let kind = InvolutionKind::DeJonquieres(data.d);
    Ok(InvolutionRecord {
        kind,
        map: Some(map),
        evaluator: Evaluator::Map,
        fixed_curve: Some(c.canonical()),
        invariant: FixedCurveInvariant::for_kind(kind),
        seed: 0,
        dj: Some(data),
    })
}

/// Symmetric matrix of a ternary quadratic form.
fn conic_matrix(q: &HPoly) -> [[Rat; 3]; 3] {
    let half = Rat::new(1.into(), 2.into());
    let mut m: [[Rat; 3]; 3] = Default::default();
    for (mono, c) in q.terms() {
        let vars: Vec<usize> = (0..3)
            .flat_map(|v| std::iter::repeat_n(v, mono.0[v] as usize))
            .collect();
        let (i, j) = (vars[0], vars[1]);
        if i == j {
            m[i][i] = c.clone();
        } else {
            m[i][j] = c * &half;
            m[j][i] = c * &half;
        }
    }
    m
}

/// Harmonic conjugation with respect to a smooth conic from a point off it.
pub fn dj_from_conic(q: &HPoly, p: &ProjPoint) -> Result<InvolutionRecord, InvolutionError> {
    if q.degree() != 2 || q.is_zero() {
        return Err(InvolutionError::NotAConic(q.degree()));
    }
    if det3(&conic_matrix(q)).is_zero() {
        return Err(InvolutionError::SingularConic);
    }
    if q.eval(p.coords()).is_zero() {
        return Err(InvolutionError::PointOnConic);
    }
    dj_involution(q, p, false)
}

pub fn geiser_record(config: PointConfig, seed: u64) -> Result<InvolutionRecord, InvolutionError> {
    let g = GeiserInvolution::new(config, seed)?;
    let sextic = g.fixed_sextic()?;
    Ok(InvolutionRecord {
        kind: InvolutionKind::Geiser,
        map: None,
        evaluator: Evaluator::Geiser(g),
        fixed_curve: Some(sextic),
        invariant: FixedCurveInvariant::for_kind(InvolutionKind::Geiser),
        seed,
        dj: None,
    })
}

pub fn bertini_record(config: PointConfig, seed: u64) -> Result<InvolutionRecord, InvolutionError> {
    let b = BertiniInvolution::new(config, seed)?;
    Ok(InvolutionRecord {
        kind: InvolutionKind::Bertini,
        map: None,
        evaluator: Evaluator::Bertini(b),
        fixed_curve: None,
        invariant: FixedCurveInvariant::for_kind(InvolutionKind::Bertini),
        seed,
        dj: None,
    })
}
