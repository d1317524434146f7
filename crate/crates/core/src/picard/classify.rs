use std::fmt;

use super::{
    fixed_rank, is_minimal, DivClass, LatticeInvolution, LatticeModel, MinimalityFailure, PicLattice, PicardError,
};

/// Case of the minimal-pair classification reached by lattice data alone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairClass {
    /// Invariant rank at least 2: a conic bundle, trivial or not on the base.
    Fibration,
    /// The plane.
    Plane,
    /// The quadric with the swap of rulings.
    Quadric,
    /// Degree 2 Del Pezzo surface (Geiser).
    DelPezzo2,
    /// Degree 1 Del Pezzo surface (Bertini).
    DelPezzo1,
    NonMinimal {
        witness: DivClass,
        failure: MinimalityFailure,
    },
}

impl PairClass {
    pub fn label(&self) -> &'static str {
        match self {
            PairClass::Fibration => "(i)/(ii)",
            PairClass::Plane => "(iii)",
            PairClass::Quadric => "(iv)",
            PairClass::DelPezzo2 => "(v)",
            PairClass::DelPezzo1 => "(vi)",
            PairClass::NonMinimal { .. } => "non-minimal",
        }
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify_pair(lat: &PicLattice, inv: &LatticeInvolution) -> Result<PairClass, PicardError> {
    // re-validate: the involution may come from another lattice of equal rank
    let inv = LatticeInvolution::new(lat, inv.matrix().clone())?;
    let m = is_minimal(lat, &inv)?;
    if let Some((witness, failure)) = m.witness {
        return Ok(PairClass::NonMinimal { witness, failure });
    }
    if fixed_rank(&inv) >= 2 {
        return Ok(PairClass::Fibration);
    }
    match (lat.model(), lat.k_squared()) {
        (LatticeModel::BlowUp(0), _) => Ok(PairClass::Plane),
        (LatticeModel::Quadric, _) => Ok(PairClass::Quadric),
        (_, 2) => Ok(PairClass::DelPezzo2),
        (_, 1) => Ok(PairClass::DelPezzo1),
        (_, k2) => Err(PicardError::Unclassified(k2)),
    }
}
