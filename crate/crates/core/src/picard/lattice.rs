use std::fmt;

use crate::exactpoly::{rank, Rat};

use super::PicardError;

/// Which geometric model the lattice represents.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LatticeModel {
    /// The plane blown up at `n` points; basis `H, E_1, ..., E_n`.
    BlowUp(usize),
    /// `P^1 x P^1`; basis of the two rulings.
    Quadric,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PicLattice {
    model: LatticeModel,
    gram: Vec<Vec<i64>>,
    canonical: DivClass,
}

/// Integer coordinates of a divisor class in the lattice basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DivClass(pub Vec<i64>);

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn make_lattice(n: usize) -> PicLattice {
    PicLattice::blow_up(n)
}

impl PicLattice {
    pub fn blow_up(n: usize) -> Self {
        let gram = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if i != j {
                            0
                        } else if i == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect();
        let mut k = vec![1; n + 1];
        k[0] = -3;
        PicLattice {
            model: LatticeModel::BlowUp(n),
            gram,
            canonical: DivClass(k),
        }
    }

    /// Hyperbolic plane with `K = (-2, -2)`.
    pub fn quadric() -> Self {
        PicLattice {
            model: LatticeModel::Quadric,
            gram: vec![vec![0, 1], vec![1, 0]],
            canonical: DivClass(vec![-2, -2]),
        }
    }

    pub fn model(&self) -> LatticeModel {
        self.model
    }

    /// Number of blown-up points; `None` for the quadric.
    pub fn points(&self) -> Option<usize> {
        match self.model {
            LatticeModel::BlowUp(n) => Some(n),
            LatticeModel::Quadric => None,
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn canonical(&self) -> &DivClass {
        &self.canonical
    }

    pub fn dot(&self, a: &DivClass, b: &DivClass) -> i64 {
        let mut s = 0i64;
        for (i, row) in self.gram.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                if *g != 0 {
                    s += g * a.0[i] * b.0[j];
                }
            }
        }
        s
    }

    pub fn k_squared(&self) -> i64 {
        self.dot(&self.canonical, &self.canonical)
    }

    /// Positive and negative eigenvalue counts of the diagonalized form.
    pub fn signature(&self) -> (usize, usize) {
        match self.model {
            LatticeModel::BlowUp(n) => (1, n),
            LatticeModel::Quadric => (1, 1),
        }
    }

    /// `2H - E1 - E3` style rendering for blow-ups, coordinates otherwise.
    pub fn describe(&self, c: &DivClass) -> String {
        if self.model == LatticeModel::Quadric {
            return c.to_string();
        }
        let mut out = String::new();
        for (i, &v) in c.0.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let name = if i == 0 { "H".to_string() } else { format!("E{i}") };
            let mag = v.unsigned_abs();
            let term = if mag == 1 { name } else { format!("{mag}{name}") };
            if out.is_empty() {
                out = if v < 0 { format!("-{term}") } else { term };
            } else {
                out.push_str(if v < 0 { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Square integer matrix acting on column vectors of class coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeMatrix(pub Vec<Vec<i64>>);

impl LatticeMatrix {
    pub fn identity(r: usize) -> Self {
        LatticeMatrix((0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: &DivClass) -> DivClass {
        DivClass(
            self.0
                .iter()
                .map(|row| row.iter().zip(&x.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.size();
        LatticeMatrix(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
                        .collect()
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        LatticeMatrix(self.0.iter().map(|r| r.iter().map(|v| -v).collect()).collect())
    }

    fn is_square(&self) -> bool {
        self.0.iter().all(|r| r.len() == self.0.len())
    }

    pub fn preserves_form(&self, lat: &PicLattice) -> bool {
        // M^T G M = G
        let n = self.size();
        let g = lat.gram();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut s = 0i64;
                for a in 0..n {
                    for b in 0..n {
                        s += self.0[a][i] * g[a][b] * self.0[b][j];
                    }
                }
                s == g[i][j]
            })
        })
    }

    pub fn squares_to_identity(&self) -> bool {
        self.mul(self) == Self::identity(self.size())
    }

    /// Transpose of each image of a basis vector, one row per basis vector.
    pub fn columns(&self) -> Vec<DivClass> {
        let n = self.size();
        (0..n)
            .map(|j| DivClass((0..n).map(|i| self.0[i][j]).collect()))
            .collect()
    }
}

/// An involutive isometry of a lattice fixing `K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeInvolution {
    m: LatticeMatrix,
}

impl LatticeInvolution {
    pub fn new(lat: &PicLattice, m: LatticeMatrix) -> Result<Self, PicardError> {
        if m.size() != lat.rank() || !m.is_square() {
            return Err(PicardError::SizeMismatch {
                rank: lat.rank(),
                found: m.size(),
            });
        }
        if !m.preserves_form(lat) {
            return Err(PicardError::NotIsometry);
        }
        if !m.squares_to_identity() {
            return Err(PicardError::NotInvolution);
        }
        if m.apply(lat.canonical()) != *lat.canonical() {
            return Err(PicardError::MovesCanonical);
        }
        Ok(LatticeInvolution { m })
    }

    pub fn identity(lat: &PicLattice) -> Self {
        LatticeInvolution {
            m: LatticeMatrix::identity(lat.rank()),
        }
    }

    pub fn matrix(&self) -> &LatticeMatrix {
        &self.m
    }

    pub fn apply(&self, x: &DivClass) -> DivClass {
        self.m.apply(x)
    }
}

/// `x -> x - 2 (a.x)/(a.a) a`, integral when `a.a` is 1 or 2 (or -1, -2).
pub fn reflection_through(lat: &PicLattice, alpha: &DivClass) -> Result<LatticeMatrix, PicardError> {
    if alpha.0.len() != lat.rank() {
        return Err(PicardError::SizeMismatch {
            rank: lat.rank(),
            found: alpha.0.len(),
        });
    }
    let aa = lat.dot(alpha, alpha);
    if !matches!(aa.abs(), 1 | 2) {
        return Err(PicardError::NonIntegralReflection(aa));
    }
    let n = lat.rank();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        let e = DivClass(e);
        let c = 2 * lat.dot(alpha, &e) / aa;
        cols.push((0..n).map(|i| e.0[i] - c * alpha.0[i]).collect::<Vec<_>>());
    }
    Ok(LatticeMatrix(
        (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect(),
    ))
}

/// `x -> -x + 2 (K.x)/K^2 K`, for `K^2` in `{1, 2}`.
#[allow(non_snake_case)]
pub fn anti_reflection_in_K(lat: &PicLattice) -> Result<LatticeInvolution, PicardError> {
    let k2 = lat.k_squared();
    if !matches!(k2, 1 | 2) {
        return Err(PicardError::KSquaredOutOfRange(k2));
    }
    let refl = reflection_through(lat, lat.canonical())?;
    LatticeInvolution::new(lat, refl.neg())
}

/// Rank of the invariant sublattice, `dim ker(M - I)`.
pub fn fixed_rank(inv: &LatticeInvolution) -> usize {
    let m = &inv.matrix().0;
    let n = m.len();
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rat::from_integer((m[i][j] - i64::from(i == j)).into()))
                .collect()
        })
        .collect();
    let r = rank(&rows, n);
    n - r
}
