//! A minimal commutative-ring abstraction over the rationals, plus dense
//! univariate polynomials whose coefficients may themselves be polynomials.
//!
//! `Q[x]`, `Q[x][y]`, `Q[x][y][z]` are all spelled `UPoly<...UPoly<Rat>>`.
//! GCDs are taken with Euclid over the field at the bottom level and with the
//! primitive pseudo-remainder sequence everywhere above it.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rat;

/// Exact commutative ring whose base coefficients are rationals.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    const IS_FIELD: bool;

    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    /// `self / rhs` when the quotient exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    /// A gcd normalized to have leading rational coefficient 1; zero iff both inputs are zero.
    fn gcd(&self, rhs: &Self) -> Self;
    /// Leading coefficient at the rational level (zero for zero).
    fn leading_rat(&self) -> Rat;
    fn scale(&self, c: &Rat) -> Self;

    fn normalized(&self) -> Self {
        if self.is_zero_elem() {
            return self.clone();
        }
        self.scale(&self.leading_rat().recip())
    }
}

impl Ring for Rat {
    const IS_FIELD: bool = true;

    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn gcd(&self, rhs: &Self) -> Self {
        if Zero::is_zero(self) && Zero::is_zero(rhs) {
            Zero::zero()
        } else {
            One::one()
        }
    }
    fn leading_rat(&self) -> Rat {
        self.clone()
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
}

/// Dense univariate polynomial, coefficients stored from degree 0 upward with
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one_elem())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero_elem(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero_elem)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero_elem();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(at).plus(c);
        }
        acc
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> UPoly<S> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rat::from_integer(k.into())))
                .collect(),
        )
    }

    fn shifted_scaled(&self, by: &R, shift: usize) -> Self {
        let mut v = vec![R::zero_elem(); shift];
        v.extend(self.coeffs.iter().map(|c| c.times(by)));
        Self::new(v)
    }

    /// Pseudo-remainder: `lc(d)^k * self mod d`, computed without division.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero");
        let lcd = d.lc().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lcr = r.lc().unwrap().clone();
            r = r.shifted_scaled(&lcd, 0).minus(&d.shifted_scaled(&lcr, dr - dd));
        }
        r
    }

    /// Quotient and remainder; `None` when a leading-coefficient division is
    /// not exact in the coefficient ring.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lcd = d.lc().unwrap();
        let mut q = vec![R::zero_elem(); self.coeffs.len().saturating_sub(dd)];
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = r.lc().unwrap().exact_div(lcd)?;
            r = r.minus(&d.shifted_scaled(&c, dr - dd));
            q[dr - dd] = c;
        }
        Some((Self::new(q), r))
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d)?;
        r.is_zero().then_some(q)
    }

    /// Normalized gcd of the coefficients.
    pub fn content(&self) -> R {
        let mut g = R::zero_elem();
        for c in &self.coeffs {
            g = g.gcd(c);
            if R::IS_FIELD && !g.is_zero_elem() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        Self::new(
            self.coeffs
                .iter()
                .map(|a| a.exact_div(&c).expect("content divides coefficients"))
                .collect(),
        )
    }

    fn gcd_euclid(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("field division");
            a = b;
            b = r.normalized();
        }
        a.normalized()
    }

    fn gcd_primitive_prs(&self, rhs: &Self) -> Self {
        let c = self.content().gcd(&rhs.content());
        let (mut a, mut b) = (self.primitive_part(), rhs.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.map_coeffs(|x| x.times(&c)).normalized()
    }
}

impl<R: Ring> Ring for UPoly<R> {
    const IS_FIELD: bool = false;

    fn zero_elem() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn one_elem() -> Self {
        Self::constant(R::one_elem())
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a.plus(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero_elem();
        }
        let mut v = vec![R::zero_elem(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero_elem() {
                    v[i + j] = v[i + j].plus(&a.times(b));
                }
            }
        }
        Self::new(v)
    }
    fn negate(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(R::negate).collect(),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }
    fn gcd(&self, rhs: &Self) -> Self {
        match (self.is_zero(), rhs.is_zero()) {
            (true, true) => Self::zero_elem(),
            (true, false) => rhs.normalized(),
            (false, true) => self.normalized(),
            _ if R::IS_FIELD => self.gcd_euclid(rhs),
            _ => self.gcd_primitive_prs(rhs),
        }
    }
    fn leading_rat(&self) -> Rat {
        self.lc().map(R::leading_rat).unwrap_or_else(Zero::zero)
    }
    fn scale(&self, c: &Rat) -> Self {
        if Zero::is_zero(c) {
            return Self::zero_elem();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact in the ring.
pub fn det_bareiss<R: Ring>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    if n == 0 {
        return R::one_elem();
    }
    let mut negate = false;
    let mut prev = R::one_elem();
    for k in 0..n - 1 {
        if a[k][k].is_zero_elem() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero_elem()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero_elem(),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let v = pivot_row[k].times(&row[j]).minus(&row[k].times(&pivot_row[j]));
                row[j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            row[k] = R::zero_elem();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.negate()
    } else {
        d
    }
}

/// Sylvester matrix of `f` and `g` in their distinguished variable.
pub fn sylvester_matrix<R: Ring>(f: &UPoly<R>, g: &UPoly<R>) -> Vec<Vec<R>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (src, deg, count) in [(f, m, n), (g, n, m)] {
        for shift in 0..count {
            let mut row = vec![R::zero_elem(); size];
            for k in 0..=deg {
                row[shift + k] = src.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}
