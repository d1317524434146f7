use std::fmt;

use num_traits::{One, Zero};

use super::hpoly::{integer_normalizer, write_rat_coeff};
use super::ring::{Ring, UPoly};
use super::roots::rational_roots;
use super::{PolyError, Rat};

/// Binary form `sum c_i s^i t^(d-i)` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BForm {
    degree: u32,
    /// `coeffs[i]` multiplies `s^i t^(degree - i)`.
    coeffs: Vec<Rat>,
}

impl BForm {
    pub fn zero(degree: u32) -> Self {
        BForm {
            degree,
            coeffs: vec![Rat::zero(); degree as usize + 1],
        }
    }

    /// Coefficients indexed by the power of `s`.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BForm {
            degree: coeffs.len() as u32 - 1,
            coeffs,
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The linear form `a*s + b*t`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![b, a])
    }

    /// Linear form vanishing at `(s:t) = (p:q)`.
    pub fn vanishing_at(p: &Rat, q: &Rat) -> Self {
        Self::linear(q.clone(), -p)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        let d = self.degree as usize;
        let mut tp = vec![Rat::one(); d + 1];
        for k in 1..=d {
            tp[k] = &tp[k - 1] * t;
        }
        let mut acc = Rat::zero();
        let mut sp = Rat::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &sp * &tp[d - i];
            sp *= s;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, PolyError> {
        if self.degree != rhs.degree {
            return Err(PolyError::DegreeMismatch(self.degree, rhs.degree));
        }
        Ok(BForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut v = vec![Rat::zero(); (self.degree + rhs.degree) as usize + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        BForm {
            degree: self.degree + rhs.degree,
            coeffs: v,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Rat::one()), |acc, _| acc.mul(self))
    }

    pub fn partial_s(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        Self::new(
            (1..=self.degree as usize)
                .map(|i| &self.coeffs[i] * Rat::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn partial_t(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let d = self.degree as usize;
        Self::new(
            (0..d)
                .map(|i| &self.coeffs[i] * Rat::from_integer((d - i).into()))
                .collect(),
        )
    }

    /// Largest `k` with `t^k` dividing the form.
    fn t_valuation(&self) -> u32 {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count() as u32
    }

    /// Dehomogenize at `t = 1`.
    pub(crate) fn dehomogenize(&self) -> UPoly<Rat> {
        UPoly::new(self.coeffs.clone())
    }

    fn homogenize(p: &UPoly<Rat>, degree: u32) -> Self {
        let mut coeffs: Vec<Rat> = p.coeffs().to_vec();
        coeffs.resize(degree as usize + 1, Rat::zero());
        BForm { degree, coeffs }
    }

    /// Canonical gcd (coprime integer coefficients, positive leading `s`-coefficient).
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(PolyError::BothZero),
            (true, false) => return Ok(other.canonical()),
            (false, true) => return Ok(self.canonical()),
            _ => {}
        }
        let vt = self.t_valuation().min(other.t_valuation());
        let g = self.dehomogenize().gcd(&other.dehomogenize());
        let deg = g.degree().unwrap_or(0) as u32;
        let base = Self::homogenize(&g, deg);
        Ok(base.mul(&BForm::from_ints(&[1]).shift_t(vt)).canonical())
    }

    fn shift_t(&self, k: u32) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_n(Rat::zero(), k as usize));
        BForm {
            degree: self.degree + k,
            coeffs,
        }
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || d.degree > self.degree {
            return None;
        }
        let qdeg = self.degree - d.degree;
        if self.is_zero() {
            return Some(Self::zero(qdeg));
        }
        let (q, r) = self.dehomogenize().div_rem(&d.dehomogenize())?;
        if !r.is_zero() || q.degree().unwrap_or(0) > qdeg as usize {
            return None;
        }
        let q = Self::homogenize(&q, qdeg);
        (q.mul(d) == *self).then_some(q)
    }

    pub fn canonical(&self) -> Self {
        let Some(lead) = self.coeffs.iter().rev().find(|c| !c.is_zero()) else {
            return self.clone();
        };
        let nz: Vec<&Rat> = self.coeffs.iter().filter(|c| !c.is_zero()).collect();
        let s = integer_normalizer(nz.into_iter(), lead);
        self.scale(&s)
    }

    /// True iff the form has no repeated linear factor over an algebraic closure.
    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroForm);
        }
        if self.degree <= 1 {
            return Ok(true);
        }
        let g = self.gcd(&self.partial_s())?;
        let g = g.gcd(&self.partial_t())?;
        Ok(g.degree == 0)
    }

    /// Number of distinct roots on the projective line, assuming squarefreeness.
    pub fn distinct_root_count(&self) -> Result<u32, PolyError> {
        if !self.is_squarefree()? {
            return Err(PolyError::NotSquarefree);
        }
        Ok(self.degree)
    }

    /// Rational roots `(s:t)` of the form, each reported once.
    pub fn rational_roots(&self) -> Result<Vec<(Rat, Rat)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroForm);
        }
        let mut out = Vec::new();
        if self.t_valuation() > 0 {
            out.push((Rat::one(), Rat::zero()));
        }
        for r in rational_roots(&self.dehomogenize())? {
            out.push((r, Rat::one()));
        }
        Ok(out)
    }
}

/// Discriminant `b^2 - 4ac` of the quadratic `a u^2 + b u + c` whose
/// coefficients are binary forms.
pub fn bform_discriminant(a: &BForm, b: &BForm, c: &BForm) -> Result<BForm, PolyError> {
    if a.is_zero() {
        return Err(PolyError::DegenerateQuadratic);
    }
    let four_ac = a.mul(c).scale(&Rat::from_integer(4.into()));
    b.mul(b).checked_add(&four_ac.scale(&-Rat::one()))
}

impl fmt::Display for BForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let d = self.degree as usize;
        let mut first = true;
        for i in (0..=d).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            write_rat_coeff(f, c, first, d > 0)?;
            first = false;
            let mut parts = Vec::new();
            for (name, e) in [("s", i), ("t", d - i)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_of_conic_normal_form() {
        // a = -1, b = 0, c = st
        let a = BForm::from_ints(&[-1]);
        let b = BForm::from_ints(&[0, 0]);
        let c = BForm::from_ints(&[0, 1, 0]);
        let d = bform_discriminant(&a, &b, &c).unwrap();
        assert_eq!(d, BForm::from_ints(&[0, 4, 0]));
        assert_eq!(d.degree(), 2);
        assert!(d.is_squarefree().unwrap());
    }

    #[test]
    fn discriminant_vanishes_for_square() {
        let d = bform_discriminant(
            &BForm::from_ints(&[1]),
            &BForm::from_ints(&[0]),
            &BForm::from_ints(&[0]),
        )
        .unwrap();
        assert!(d.is_zero());
        assert!(matches!(d.is_squarefree(), Err(PolyError::ZeroForm)));
        assert!(matches!(
            bform_discriminant(&BForm::from_ints(&[0]), &d, &d),
            Err(PolyError::DegenerateQuadratic)
        ));
    }

    #[test]
    fn squarefree_examples() {
        assert!(BForm::from_ints(&[0, 4, 0]).is_squarefree().unwrap());
        assert!(!BForm::from_ints(&[0, 0, 1, 0, 0]).is_squarefree().unwrap());
        // (s - t)^2 (s + t)
        let sq = BForm::from_ints(&[-1, 1]).pow(2).mul(&BForm::from_ints(&[1, 1]));
        assert!(!sq.is_squarefree().unwrap());
    }

    #[test]
    fn division_and_gcd() {
        let l1 = BForm::from_ints(&[1, 2]);
        let l2 = BForm::from_ints(&[0, 1]);
        let p = l1.mul(&l2).mul(&l2);
        assert_eq!(p.div_exact(&l2).unwrap(), l1.mul(&l2));
        assert!(l1.div_exact(&l2).is_none());
        assert_eq!(p.gcd(&l2.mul(&BForm::from_ints(&[1, 0]))).unwrap(), l2.canonical());
    }

    #[test]
    fn roots_including_infinity() {
        // s * t * (2s - 3t): roots (0:1), (1:0), (3/2:1)
        let f = BForm::from_ints(&[0, 1])
            .mul(&BForm::from_ints(&[1, 0]))
            .mul(&BForm::from_ints(&[-3, 2]));
        let roots = f.rational_roots().unwrap();
        assert_eq!(roots.len(), 3);
        for (s, t) in roots {
            assert!(f.eval(&s, &t).is_zero());
        }
    }
}
