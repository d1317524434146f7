use super::{DivClass, LatticeInvolution, LatticeModel, PicLattice, PicardError};

/// Range of the `H`-coefficient `a` of an exceptional class on the blow-up
/// at `n <= 8` points. Writing `E = aH - sum b_i E_i`, the conditions
/// `sum b = 3a - 1`, `sum b^2 = a^2 + 1` and Cauchy-Schwarz give
/// `(9 - n) a^2 - 6a + 1 - n <= 0`.
pub fn degree_bound(n: usize) -> (i64, i64) {
    let n = n as i64;
    let q = |a: i64| (9 - n) * a * a - 6 * a + 1 - n;
    let mut lo = 0;
    while q(lo - 1) <= 0 {
        lo -= 1;
    }
    let mut hi = 0;
    while q(hi + 1) <= 0 {
        hi += 1;
    }
    (lo, hi)
}

/// All classes with `E^2 = -1` and `K.E = -1`, sorted.
pub fn exceptional_classes(lat: &PicLattice) -> Result<Vec<DivClass>, PicardError> {
    let n = match lat.model() {
        LatticeModel::Quadric => return Ok(Vec::new()),
        LatticeModel::BlowUp(n) if n > 8 => return Err(PicardError::TooManyPoints(n)),
        LatticeModel::BlowUp(n) => n,
    };
    let (lo, hi) = degree_bound(n);
    let mut out = Vec::new();
    let mut b = vec![0i64; n];
    for a in lo..=hi {
        search(&mut b, 0, 3 * a - 1, a * a + 1, &mut |bs| {
            let mut c = Vec::with_capacity(n + 1);
            c.push(a);
            c.extend(bs.iter().map(|v| -v));
            out.push(DivClass(c));
        });
    }
    out.sort();
    Ok(out)
}

/// Fills `b[i..]` with integers of total `sum` and squared total `sq`.
fn search(b: &mut [i64], i: usize, sum: i64, sq: i64, emit: &mut dyn FnMut(&[i64])) {
    let k = (b.len() - i) as i64;
    if k == 0 {
        if sum == 0 && sq == 0 {
            emit(b);
        }
        return;
    }
    // the remaining k entries need sum^2 <= k * sq
    if sq < 0 || sum * sum > k * sq {
        return;
    }
    let r = (sq as f64).sqrt() as i64 + 1;
    for v in -r..=r {
        let rest = sq - v * v;
        if rest < 0 {
            continue;
        }
        b[i] = v;
        search(b, i + 1, sum - v, rest, emit);
    }
}

/// Which half of the minimality criterion a witness violates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MinimalityFailure {
    /// `M E = E`: the curve can be contracted equivariantly.
    Invariant,
    /// `E . M E <= 0` with `M E != E`: disjoint from its image.
    Disjoint { intersection: i64 },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Minimality {
    pub minimal: bool,
    pub witness: Option<(DivClass, MinimalityFailure)>,
}

/// Every exceptional class `E` must satisfy `M E != E` and `E . M E >= 1`.
pub fn is_minimal(lat: &PicLattice, inv: &LatticeInvolution) -> Result<Minimality, PicardError> {
    if inv.matrix().size() != lat.rank() {
        return Err(PicardError::SizeMismatch {
            rank: lat.rank(),
            found: inv.matrix().size(),
        });
    }
    for e in exceptional_classes(lat)? {
        let se = inv.apply(&e);
        let failure = if se == e {
            Some(MinimalityFailure::Invariant)
        } else {
            let i = lat.dot(&e, &se);
            (i <= 0).then_some(MinimalityFailure::Disjoint { intersection: i })
        };
        if let Some(f) = failure {
            return Ok(Minimality {
                minimal: false,
                witness: Some((e, f)),
            });
        }
    }
    Ok(Minimality {
        minimal: true,
        witness: None,
    })
}
