//! Serializable command outputs. Rationals, points and polynomials are
//! written as strings.

use serde::Serialize;

use cremona::exactpoly::HPoly;
use cremona::involutions::{FactorBookkeeping, InvolutionRecord, PointConfig};
use cremona::picard::{DivClass, PicLattice};
use cremona::projmaps::{ProjPoint, RationalMap};

pub fn poly(f: &HPoly) -> String {
    f.to_string()
}

pub fn point(p: &ProjPoint) -> String {
    p.to_string()
}

pub fn components(m: &RationalMap) -> Vec<String> {
    m.components().iter().map(poly).collect()
}

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub command: String,
    pub seed: u64,
    #[serde(flatten)]
    pub body: T,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub error: ErrorInfo,
}

#[derive(Serialize)]
pub struct ErrorInfo {
    /// `validation` or `internal`.
    pub kind: &'static str,
    pub reason: String,
}

#[derive(Serialize)]
pub struct DjInfo {
    pub center: String,
    pub discriminant: String,
    pub singular_fibres: u32,
    pub trusted: bool,
    pub singularities_checked: bool,
}

#[derive(Serialize)]
pub struct BasePointsInfo {
    pub rational: Vec<String>,
    /// Degree of the projected base locus without rational linear factors.
    pub irrational_degree: u32,
}

#[derive(Serialize)]
pub struct ConfigInfo {
    pub points: Vec<String>,
    pub system: Vec<String>,
    pub system_dimension: usize,
}

impl ConfigInfo {
    pub fn new(c: &PointConfig) -> Self {
        ConfigInfo {
            points: c.points().iter().map(point).collect(),
            system: c.system().iter().map(poly).collect(),
            system_dimension: c.report().system_dimension,
        }
    }
}

#[derive(Serialize)]
pub struct Bookkeeping {
    pub resultant_degree: u32,
    pub base_contribution: u32,
    pub input_contribution: u32,
    pub residual_degree: u32,
    pub common_degree: u32,
    pub attempts: u32,
    pub balances: bool,
}

impl From<&FactorBookkeeping> for Bookkeeping {
    fn from(b: &FactorBookkeeping) -> Self {
        Bookkeeping {
            resultant_degree: b.resultant_degree,
            base_contribution: b.base_contribution,
            input_contribution: b.input_contribution,
            residual_degree: b.residual_degree,
            common_degree: b.common_degree,
            attempts: b.attempts,
            balances: b.balances(),
        }
    }
}

#[derive(Serialize)]
pub struct Evaluation {
    pub input: String,
    pub image: String,
    pub round_trip: bool,
    pub bookkeeping: Bookkeeping,
}

#[derive(Serialize)]
pub struct Involution {
    pub kind: String,
    pub label: String,
    pub degree: u32,
    pub components: Option<Vec<String>>,
    pub fixed_curve: Option<String>,
    pub invariant: String,
    pub genus: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dj: Option<DjInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_points: Option<BasePointsInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluations: Option<Vec<Evaluation>>,
}

impl Involution {
    pub fn from_record(r: &InvolutionRecord) -> Self {
        Involution {
            kind: r.kind.to_string(),
            label: r.kind.to_string(),
            degree: r.degree().unwrap_or(0),
            components: r.map.as_ref().map(components),
            fixed_curve: r.fixed_curve.as_ref().map(poly),
            invariant: r.invariant.to_string(),
            genus: r.invariant.genus(),
            dj: None,
            base_points: None,
            config: None,
            evaluations: None,
        }
    }
}

#[derive(Serialize)]
pub struct Verify {
    pub involutive: bool,
    pub degree: u32,
    pub components: Vec<String>,
    /// `symbolic` (composition) or `pointwise` (seeded samples).
    pub method: &'static str,
}

#[derive(Serialize)]
pub struct FixedCurve {
    pub degree: u32,
    pub components: Vec<String>,
    /// `None` when the fixed locus contains no curve.
    pub fixed_curve: Option<String>,
    pub fixed_curve_degree: u32,
}

#[derive(Serialize)]
pub struct Invariant {
    pub kind: String,
    pub degree: u32,
    pub invariant: String,
    pub genus: Option<u32>,
    pub fixed_curve_degree: Option<u32>,
}

#[derive(Serialize)]
pub struct Classify {
    pub label: String,
    pub recognized: bool,
    pub degree: u32,
    pub fixed_curve_degree: Option<u32>,
    pub center: Option<String>,
    pub invariant: Option<String>,
    pub from_metadata: bool,
    pub rational_components_certified: bool,
}

#[derive(Serialize)]
pub struct ClassOut {
    pub coordinates: Vec<i64>,
    pub description: String,
}

impl ClassOut {
    pub fn new(lat: &PicLattice, c: &DivClass) -> Self {
        ClassOut {
            coordinates: c.0.clone(),
            description: lat.describe(c),
        }
    }
}

#[derive(Serialize)]
pub struct Lattice {
    pub model: String,
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    pub k_squared: i64,
    pub signature: [usize; 2],
}

#[derive(Serialize)]
pub struct Reflection {
    pub model: String,
    pub matrix: Vec<Vec<i64>>,
    /// Passes the isometry, involution and `K`-fixing checks.
    pub valid_involution: bool,
    pub fixed_rank: Option<usize>,
}

#[derive(Serialize)]
pub struct Exceptionals {
    pub model: String,
    pub count: usize,
    pub classes: Vec<ClassOut>,
}

#[derive(Serialize)]
pub struct Witness {
    pub class: ClassOut,
    /// `invariant` (`M E = E`) or `disjoint` (`E . M E <= 0`).
    pub failure: &'static str,
    pub intersection: Option<i64>,
}

#[derive(Serialize)]
pub struct Minimal {
    pub model: String,
    pub minimal: bool,
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
pub struct PairLabel {
    pub model: String,
    pub label: String,
    pub fixed_rank: usize,
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
pub struct BundleStep {
    pub center: String,
    pub n: u32,
    pub section_self_intersection: i64,
    pub singular_fibres: u32,
    pub contact_orders: Vec<u32>,
}

#[derive(Serialize)]
pub struct Elementary {
    pub start: BundleStep,
    pub steps: Vec<BundleStep>,
}
