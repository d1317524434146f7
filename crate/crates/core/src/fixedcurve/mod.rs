//! Fixed curves of involutions, the genus of plane curves with ordinary
//! singularities, and the conjugacy invariant attached to each involution.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactpoly::{HPoly, PolyError};
use crate::involutions::{is_singular_at, DjData, Evaluator, InvolutionError, InvolutionKind, InvolutionRecord};
use crate::projmaps::{compose, cross, is_identity, MapError, MapValue, ProjPoint, RationalMap};
use crate::rng::SeededRng;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixedCurveError {
    #[error("map is the identity; every point is fixed")]
    IdentityMap,
    #[error("genus formula is negative for degree {degree} and multiplicities {mults:?}")]
    NegativeGenus { degree: u32, mults: Vec<u32> },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("multiplicities must be at least 1")]
    ZeroMultiplicity,
    #[error("discriminant is not squarefree")]
    NotSquarefree,
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("not involutive")]
    NotInvolution,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum FixedCurveKind {
    Empty,
    /// Genus at least 1; the elliptic case counts as hyperelliptic.
    Hyperelliptic {
        genus: u32,
    },
    NonHyperellipticGenus3,
    NonHyperellipticGenus4OnSingularQuadric,
}

impl FixedCurveKind {
    pub fn genus(self) -> Option<u32> {
        match self {
            FixedCurveKind::Empty => None,
            FixedCurveKind::Hyperelliptic { genus } => Some(genus),
            FixedCurveKind::NonHyperellipticGenus3 => Some(3),
            FixedCurveKind::NonHyperellipticGenus4OnSingularQuadric => Some(4),
        }
    }
}

impl fmt::Display for FixedCurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedCurveKind::Empty => f.write_str("empty"),
            FixedCurveKind::Hyperelliptic { genus } => write!(f, "hyperelliptic({genus})"),
            FixedCurveKind::NonHyperellipticGenus3 => f.write_str("non-hyperelliptic-genus-3"),
            FixedCurveKind::NonHyperellipticGenus4OnSingularQuadric => {
                f.write_str("non-hyperelliptic-genus-4-singular-quadric")
            }
        }
    }
}

/// Normalized fixed curve type, assigned from the construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FixedCurveInvariant {
    pub kind: FixedCurveKind,
    pub source: InvolutionKind,
}

impl FixedCurveInvariant {
    pub fn for_kind(source: InvolutionKind) -> Self {
        let kind = match source {
            InvolutionKind::DeJonquieres(d) if d <= 2 => FixedCurveKind::Empty,
            InvolutionKind::DeJonquieres(d) => FixedCurveKind::Hyperelliptic { genus: d - 2 },
            InvolutionKind::Geiser => FixedCurveKind::NonHyperellipticGenus3,
            InvolutionKind::Bertini => FixedCurveKind::NonHyperellipticGenus4OnSingularQuadric,
        };
        FixedCurveInvariant { kind, source }
    }

    pub fn genus(&self) -> Option<u32> {
        self.kind.genus()
    }
}

impl fmt::Display for FixedCurveInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

/// Gcd of the fixed-point minors: the divisorial part of the fixed locus.
/// A constant result means no fixed curve.
pub fn fixed_locus(sigma: &RationalMap) -> Result<HPoly, FixedCurveError> {
    let minors = sigma.fixed_point_minors();
    let mut g: Option<HPoly> = None;
    for m in minors.iter().filter(|m| !m.is_zero()) {
        g = Some(match g {
            None => m.canonical(),
            Some(acc) => acc.gcd(m)?,
        });
    }
    g.ok_or(FixedCurveError::IdentityMap)
}

/// `(d-1)(d-2)/2 - sum m(m-1)/2` for ordinary singular points of the given
/// multiplicities. Multiplicity 1 is accepted and contributes nothing.
pub fn plane_genus(d: u32, mults: &[u32]) -> Result<u32, FixedCurveError> {
    if d == 0 {
        return Err(FixedCurveError::ZeroDegree);
    }
    if mults.contains(&0) {
        return Err(FixedCurveError::ZeroMultiplicity);
    }
    let d = d as i64;
    let drop: i64 = mults.iter().map(|&m| (m as i64) * (m as i64 - 1) / 2).sum();
    let g = (d - 1) * (d - 2) / 2 - drop;
    u32::try_from(g).map_err(|_| FixedCurveError::NegativeGenus {
        degree: d as u32,
        mults: mults.to_vec(),
    })
}

/// Number of singular fibres of the conic bundle of a DJ instance; equals
/// `2d - 2` since the discriminant is squarefree.
pub fn singular_fibre_count(dj: &DjData) -> Result<u32, FixedCurveError> {
    let disc = &dj.report.discriminant;
    if disc.is_zero() || !disc.is_squarefree()? {
        return Err(FixedCurveError::NotSquarefree);
    }
    Ok(disc.degree())
}

fn check(cond: bool, what: &str) -> Result<(), FixedCurveError> {
    if cond {
        Ok(())
    } else {
        Err(FixedCurveError::CrossCheck(what.to_string()))
    }
}

/// Invariant of a constructed involution, cross-checked against the
/// record's geometry where that is computable.
pub fn invariant_of(record: &InvolutionRecord) -> Result<FixedCurveInvariant, FixedCurveError> {
    let inv = FixedCurveInvariant::for_kind(record.kind);
    check(inv == record.invariant, "stored invariant disagrees with kind")?;
    match record.kind {
        InvolutionKind::DeJonquieres(d) => {
            let curve = record
                .fixed_curve
                .as_ref()
                .ok_or_else(|| FixedCurveError::CrossCheck("missing fixed curve".into()))?;
            let dj = record
                .dj
                .as_ref()
                .ok_or_else(|| FixedCurveError::CrossCheck("missing DJ data".into()))?;
            check(curve.degree() == d && dj.d == d, "fixed curve degree")?;
            check(
                curve.multiplicity_at(dj.center.coords()) == d - 2,
                "multiplicity at the center",
            )?;
            if d >= 3 {
                check(plane_genus(d, &[d - 2])? == d - 2, "genus")?;
                check(inv.genus() == Some(d - 2), "genus")?;
            }
            if let Some(map) = &record.map {
                check(map.degree() == d, "map degree")?;
                check(
                    fixed_locus(map)?.proportional(curve),
                    "fixed locus differs from the curve",
                )?;
            }
        }
        InvolutionKind::Geiser => {
            let curve = record
                .fixed_curve
                .as_ref()
                .ok_or_else(|| FixedCurveError::CrossCheck("missing fixed curve".into()))?;
            check(curve.degree() == 6, "Jacobian degree")?;
            if let Evaluator::Geiser(g) = &record.evaluator {
                let pts = g.config().points();
                check(
                    pts.iter().all(|p| is_singular_at(curve, p)),
                    "double points of the Jacobian",
                )?;
                check(plane_genus(6, &vec![2; pts.len()])? == 3, "genus")?;
            }
        }
        InvolutionKind::Bertini => {
            if let Evaluator::Bertini(b) = &record.evaluator {
                check(plane_genus(9, &vec![3; b.config().points().len()])? == 4, "genus")?;
            }
        }
    }
    Ok(inv)
}

/// Classifier outcome.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClassLabel {
    Known(InvolutionKind),
    /// No rule matched; construction metadata is needed.
    Unrecognized,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Known(k) => k.fmt(f),
            ClassLabel::Unrecognized => f.write_str("unrecognized: supply construction metadata"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    pub label: ClassLabel,
    pub degree: u32,
    pub fixed_curve_degree: Option<u32>,
    /// DJ center found for raw maps.
    pub center: Option<ProjPoint>,
    /// Label taken from construction metadata rather than detected.
    pub from_metadata: bool,
    /// False for raw maps: rational fixed components cannot be excluded.
    pub rational_components_certified: bool,
}

pub enum ClassifyInput<'a> {
    Record(&'a InvolutionRecord),
    Map(&'a RationalMap),
}

/// Samples used for the pointwise involution test of high-degree raw maps.
pub const POINTWISE_SAMPLES: usize = 20;

pub fn classify_involution(input: ClassifyInput<'_>, seed: u64) -> Result<Classification, FixedCurveError> {
    match input {
        ClassifyInput::Record(r) => Ok(Classification {
            label: ClassLabel::Known(r.kind),
            degree: r.degree().unwrap_or(0),
            fixed_curve_degree: r.fixed_curve.as_ref().map(HPoly::degree),
            center: r.dj.as_ref().map(|d| d.center.clone()),
            from_metadata: true,
            rational_components_certified: true,
        }),
        ClassifyInput::Map(m) => classify_raw(m, seed),
    }
}

fn sample_point(rng: &mut SeededRng) -> Option<ProjPoint> {
    ProjPoint::new(std::array::from_fn(|_| rng.rat_in(-7, 7))).ok()
}

/// Symbolic check up to degree 6, pointwise above.
pub fn check_involutive(m: &RationalMap, seed: u64) -> Result<(), FixedCurveError> {
    if m.degree() <= 6 {
        return if is_identity(&compose(m, m)?) {
            Ok(())
        } else {
            Err(FixedCurveError::NotInvolution)
        };
    }
    let mut rng = SeededRng::new(seed);
    let mut checked = 0;
    let mut tries = 0;
    while checked < POINTWISE_SAMPLES {
        tries += 1;
        if tries > 50 * POINTWISE_SAMPLES {
            return Err(FixedCurveError::NotInvolution);
        }
        let Some(x) = sample_point(&mut rng) else { continue };
        let MapValue::Point(y) = m.eval(&x) else { continue };
        let MapValue::Point(back) = m.eval(&y) else { continue };
        if back != x {
            return Err(FixedCurveError::NotInvolution);
        }
        checked += 1;
    }
    Ok(())
}

fn classify_raw(m: &RationalMap, seed: u64) -> Result<Classification, FixedCurveError> {
    let d = m.degree();
    check_involutive(m, seed)?;
    let mut out = Classification {
        label: ClassLabel::Unrecognized,
        degree: d,
        fixed_curve_degree: None,
        center: None,
        from_metadata: false,
        rational_components_certified: false,
    };
    if d < 2 {
        return Ok(out);
    }
    if d == 17 {
        out.label = ClassLabel::Known(InvolutionKind::Bertini);
        return Ok(out);
    }
    let fixed = fixed_locus(m)?;
    out.fixed_curve_degree = Some(fixed.degree());
    if fixed.degree() == d {
        if let Some(p) = dj_center(m, seed)? {
            let mult_f = fixed.multiplicity_at(p.coords());
            let mult_base = m
                .components()
                .iter()
                .map(|c| c.multiplicity_at(p.coords()))
                .min()
                .unwrap_or(0);
            if mult_f == d - 2 && mult_base == d - 1 {
                out.label = ClassLabel::Known(InvolutionKind::DeJonquieres(d));
                out.center = Some(p);
                return Ok(out);
            }
        }
    }
    if d == 8 && fixed.degree() == 6 {
        out.label = ClassLabel::Known(InvolutionKind::Geiser);
    }
    Ok(out)
}

/// Common point of the lines joining sampled points to their images,
/// confirmed on a third line.
fn dj_center(m: &RationalMap, seed: u64) -> Result<Option<ProjPoint>, FixedCurveError> {
    let mut rng = SeededRng::new(seed ^ 0x5851_f42d_4c95_7f2d);
    let mut lines = Vec::new();
    let mut tries = 0;
    while lines.len() < 3 && tries < 200 {
        tries += 1;
        let Some(x) = sample_point(&mut rng) else { continue };
        let MapValue::Point(y) = m.eval(&x) else { continue };
        let Some(l) = x.join(&y) else { continue };
        lines.push(l);
    }
    if lines.len() < 3 {
        return Ok(None);
    }
    let c = cross(&lines[0], &lines[1]);
    let Ok(p) = ProjPoint::new(c) else { return Ok(None) };
    let on_third: num_rational::BigRational = lines[2].iter().zip(p.coords()).map(|(a, b)| a * b).sum();
    Ok(on_third.is_zero().then_some(p))
}
