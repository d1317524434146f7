use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{Ring, UPoly};
use super::{PolyError, Rat};

/// Exponent triple for `x^i y^j z^k`, ordered graded-lexicographically with
/// `x > y > z`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub [u32; 3]);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent triples of the given degree, leading monomial first.
pub fn monomials(degree: u32) -> Vec<Mono> {
    let mut v = Vec::with_capacity(((degree + 1) * (degree + 2) / 2) as usize);
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            v.push(Mono([i, j, degree - i - j]));
        }
    }
    v
}

/// Homogeneous polynomial in `x, y, z` with rational coefficients.
///
/// The zero polynomial still carries a degree tag, so that sums and
/// products stay well-typed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HPoly {
    degree: u32,
    terms: BTreeMap<Mono, Rat>,
}

impl HPoly {
    pub fn zero(degree: u32) -> Self {
        HPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: Rat, exps: [u32; 3]) -> Self {
        let mono = Mono(exps);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        HPoly {
            degree: mono.degree(),
            terms,
        }
    }

    /// The coordinate `x` (0), `y` (1) or `z` (2).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(Rat::one(), e)
    }

    pub fn x() -> Self {
        Self::var(0)
    }
    pub fn y() -> Self {
        Self::var(1)
    }
    pub fn z() -> Self {
        Self::var(2)
    }

    /// Builds a polynomial from terms, summing repeated monomials.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = ([u32; 3], Rat)>) -> Result<Self, PolyError> {
        let mut map: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (e, c) in terms {
            let m = Mono(e);
            if m.degree() != degree {
                return Err(PolyError::Inhomogeneous {
                    expected: degree,
                    found: m.degree(),
                });
            }
            *map.entry(m).or_insert_with(Rat::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HPoly { degree, terms: map })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading monomial downward.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, e: [u32; 3]) -> Rat {
        self.terms.get(&Mono(e)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Coefficient vector in the order of [`monomials`].
    pub fn coefficient_vector(&self) -> Vec<Rat> {
        monomials(self.degree).into_iter().map(|m| self.coeff(m.0)).collect()
    }

    pub fn from_coefficient_vector(degree: u32, coeffs: &[Rat]) -> Self {
        let terms = monomials(degree)
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, c.clone()))
            .collect();
        HPoly { degree, terms }
    }

    pub fn eval(&self, pt: &[Rat; 3]) -> Rat {
        let mut pows: [Vec<Rat>; 3] = Default::default();
        for (v, p) in pows.iter_mut().zip(pt) {
            v.push(Rat::one());
            for _ in 0..self.degree {
                let next = v.last().unwrap() * p;
                v.push(next);
            }
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let [i, j, k] = m.0;
            acc += c * &pows[0][i as usize] * &pows[1][j as usize] * &pows[2][k as usize];
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        HPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, PolyError> {
        if self.degree != rhs.degree {
            return Err(PolyError::DegreeMismatch(self.degree, rhs.degree));
        }
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let e = terms.entry(*m).or_insert_with(Rat::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Ok(HPoly {
            degree: self.degree,
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(Rat::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let degree = self.degree.saturating_sub(1);
        let mut out = Self::zero(degree);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut ne = m.0;
            ne[i] -= 1;
            out.terms.insert(Mono(ne), c * Rat::from_integer(e.into()));
        }
        out
    }

    pub fn gradient(&self) -> [HPoly; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    /// `self(g0, g1, g2)`; the substituted polynomials must share a degree.
    pub fn substitute(&self, g: &[HPoly; 3]) -> Result<Self, PolyError> {
        let e = g[0].degree;
        if g[1].degree != e || g[2].degree != e {
            return Err(PolyError::DegreeMismatch(g[1].degree, g[2].degree));
        }
        let mut pows: [Vec<HPoly>; 3] = Default::default();
        let mut need = [0u32; 3];
        for m in self.terms.keys() {
            for v in 0..3 {
                need[v] = need[v].max(m.0[v]);
            }
        }
        for v in 0..3 {
            pows[v].push(Self::constant(Rat::one()));
            for k in 0..need[v] {
                let next = &pows[v][k as usize] * &g[v];
                pows[v].push(next);
            }
        }
        let mut out = Self::zero(self.degree * e);
        for (m, c) in &self.terms {
            let [i, j, k] = m.0;
            let t = &(&pows[0][i as usize] * &pows[1][j as usize]) * &pows[2][k as usize];
            out = out.checked_add(&t.scale(c))?;
        }
        Ok(out)
    }

    /// `self(M v)`: pulls the polynomial back along a linear change of coordinates.
    pub fn linear_pullback(&self, m: &[[Rat; 3]; 3]) -> Self {
        let rows = linear_forms(m);
        self.substitute(&rows).expect("linear forms share degree 1")
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return self.degree.checked_sub(d.degree).map(Self::zero);
        }
        let qdeg = self.degree.checked_sub(d.degree)?;
        let (dm, dc) = d.leading().map(|(m, c)| (*m, c.clone()))?;
        let mut r = self.clone();
        let mut q = Self::zero(qdeg);
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (*m, c.clone())) {
            let mut qe = [0; 3];
            for v in 0..3 {
                qe[v] = rm.0[v].checked_sub(dm.0[v])?;
            }
            let t = Self::monomial(rc / &dc, qe);
            r = r.checked_add(&(&t * d).scale(&-Rat::one())).ok()?;
            q = q.checked_add(&t).ok()?;
        }
        Some(q)
    }

    /// Largest `k` with `z^k` dividing `self`.
    fn z_valuation(&self) -> u32 {
        self.terms.keys().map(|m| m.0[2]).min().unwrap_or(0)
    }

    /// Dehomogenize at `z = 1` into `Q[y][x]` (outer variable `x`).
    pub(crate) fn dehomogenize_z(&self) -> UPoly<UPoly<Rat>> {
        let mut outer: Vec<Vec<Rat>> = Vec::new();
        for (m, c) in &self.terms {
            let [i, j, _] = m.0;
            let (i, j) = (i as usize, j as usize);
            if outer.len() <= i {
                outer.resize(i + 1, Vec::new());
            }
            if outer[i].len() <= j {
                outer[i].resize(j + 1, Rat::zero());
            }
            outer[i][j] += c;
        }
        UPoly::new(outer.into_iter().map(UPoly::new).collect())
    }

    /// Inverse of [`dehomogenize_z`] at the smallest degree that fits.
    pub(crate) fn homogenize_z(p: &UPoly<UPoly<Rat>>) -> Self {
        let mut deg = 0;
        for (i, inner) in p.coeffs().iter().enumerate() {
            if let Some(dj) = inner.degree() {
                deg = deg.max(i + dj);
            }
        }
        let mut terms = BTreeMap::new();
        for (i, inner) in p.coeffs().iter().enumerate() {
            for (j, c) in inner.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert(Mono([i as u32, j as u32, (deg - i - j) as u32]), c.clone());
                }
            }
        }
        HPoly {
            degree: deg as u32,
            terms,
        }
    }

    fn shift_z(&self, k: u32) -> Self {
        HPoly {
            degree: self.degree + k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono([m.0[0], m.0[1], m.0[2] + k]), c.clone()))
                .collect(),
        }
    }

    /// Greatest common divisor in canonical form.
    ///
    /// Powers of `z` are split off first; the rest is dehomogenized at
    /// `z = 1` and handled as a bivariate gcd.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(PolyError::BothZero),
            (true, false) => return Ok(other.canonical()),
            (false, true) => return Ok(self.canonical()),
            _ => {}
        }
        let vz = self.z_valuation().min(other.z_valuation());
        let g = self.dehomogenize_z().gcd(&other.dehomogenize_z());
        Ok(Self::homogenize_z(&g).shift_z(vz).canonical())
    }

    /// Integer coefficients with content 1 and a positive leading coefficient.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let scale = integer_normalizer(self.terms.values(), self.leading().unwrap().1);
        self.scale(&scale)
    }

    /// True iff the two polynomials are nonzero rational multiples of each other.
    pub fn proportional(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Multiplicity of the curve `self = 0` at `pt` (0 when `pt` is off the curve).
    pub fn multiplicity_at(&self, pt: &[Rat; 3]) -> u32 {
        if self.is_zero() {
            return u32::MAX;
        }
        let frame = frame_sending_y_to(pt);
        let moved = self.linear_pullback(&frame);
        let top_y = moved.terms.keys().map(|m| m.0[1]).max().unwrap_or(0);
        self.degree - top_y
    }
}

/// Scalar that turns the given coefficients into coprime integers with the
/// designated leading coefficient positive.
pub fn integer_normalizer<'a>(coeffs: impl Iterator<Item = &'a Rat> + Clone, leading: &Rat) -> Rat {
    let lcm = coeffs.clone().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let gcd = coeffs.fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm / c.denom()))));
    let mut s = Rat::new(lcm, gcd);
    if leading.is_negative() {
        s = -s;
    }
    s
}

/// The three coordinate functions of `v -> M v` as linear forms.
pub fn linear_forms(m: &[[Rat; 3]; 3]) -> [HPoly; 3] {
    std::array::from_fn(|r| {
        HPoly::from_terms(
            1,
            (0..3).map(|c| {
                let mut e = [0; 3];
                e[c] = 1;
                (e, m[r][c].clone())
            }),
        )
        .expect("degree-1 terms")
    })
}

/// An invertible matrix whose middle column is `p`, so that `(0:1:0)` maps to `p`.
pub fn frame_sending_y_to(p: &[Rat; 3]) -> [[Rat; 3]; 3] {
    let z = Rat::zero;
    let o = Rat::one;
    let cols: [[Rat; 3]; 3] = if !p[1].is_zero() {
        [[o(), z(), z()], p.clone(), [z(), z(), o()]]
    } else if !p[0].is_zero() {
        [[z(), o(), z()], p.clone(), [z(), z(), o()]]
    } else {
        [[o(), z(), z()], p.clone(), [z(), o(), z()]]
    };
    std::array::from_fn(|r| std::array::from_fn(|c| cols[c][r].clone()))
}

impl std::ops::Mul for &HPoly {
    type Output = HPoly;

    fn mul(self, rhs: &HPoly) -> HPoly {
        let mut terms: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = Mono([ma.0[0] + mb.0[0], ma.0[1] + mb.0[1], ma.0[2] + mb.0[2]]);
                *terms.entry(m).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        HPoly {
            degree: self.degree + rhs.degree,
            terms,
        }
    }
}

/// Panics on a degree mismatch; use [`HPoly::checked_add`] for untrusted input.
impl std::ops::Add for &HPoly {
    type Output = HPoly;

    fn add(self, rhs: &HPoly) -> HPoly {
        self.checked_add(rhs).expect("adding forms of different degree")
    }
}

impl std::ops::Sub for &HPoly {
    type Output = HPoly;

    fn sub(self, rhs: &HPoly) -> HPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &HPoly {
    type Output = HPoly;

    fn neg(self) -> HPoly {
        self.scale(&-Rat::one())
    }
}

pub(crate) fn write_rat_coeff(f: &mut fmt::Formatter<'_>, c: &Rat, first: bool, has_monomial: bool) -> fmt::Result {
    let abs = c.abs();
    if first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else if c.is_negative() {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if !has_monomial {
        write!(f, "{abs}")
    } else if abs.is_one() {
        Ok(())
    } else {
        write!(f, "{abs}*")
    }
}

/// Prints e.g. `3*x^2*y - 1/2*z^3`; the zero polynomial prints as `0`.
impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let has_mono = m.degree() > 0;
            write_rat_coeff(f, c, n == 0, has_mono)?;
            let mut first_var = true;
            for (v, name) in ["x", "y", "z"].iter().enumerate() {
                let e = m.0[v];
                if e == 0 {
                    continue;
                }
                if !first_var {
                    f.write_str("*")?;
                }
                first_var = false;
                f.write_str(name)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
