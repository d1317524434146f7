//! Rational roots of univariate polynomials by the rational root theorem.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::{Ring, UPoly};
use super::{PolyError, Rat};

/// Integers above this size are not factored by trial division.
const FACTOR_LIMIT: u128 = 1 << 80;

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>, PolyError> {
    let n = n.abs();
    let mut m = n
        .to_u128()
        .filter(|&v| v <= FACTOR_LIMIT)
        .ok_or(PolyError::CoefficientTooLarge)?;
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut p = 2u128;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
        if p > 1 << 26 {
            // trial division stalled on a large cofactor
            return Err(PolyError::CoefficientTooLarge);
        }
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut divs = vec![1u128];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = *d;
            next.push(acc);
            for _ in 0..e {
                acc *= p;
                next.push(acc);
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Ok(divs.into_iter().map(BigInt::from).collect())
}

/// Distinct rational roots, in increasing order.
pub fn rational_roots(p: &UPoly<Rat>) -> Result<Vec<Rat>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroForm);
    }
    // squarefree part keeps coefficients small
    let g = p.gcd(&p.derivative());
    let sf = p.div_exact(&g).expect("gcd divides");
    let lcm = sf.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = sf.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut roots = Vec::new();
    let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(Rat::zero());
        ints.drain(..lead_zeros);
    }
    if ints.len() > 1 {
        let a0 = ints[0].clone();
        let an = ints.last().unwrap().clone();
        let num_divs = positive_divisors(&a0)?;
        let den_divs = positive_divisors(&an)?;
        let poly = UPoly::new(ints.iter().map(|c| Rat::from_integer(c.clone())).collect());
        for q in &den_divs {
            for pn in &num_divs {
                if !pn.gcd(q).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let cand = Rat::new(pn * sign, q.clone());
                    if poly.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}
