//! Exact kernels and ranks over the rationals.
//!
//! Rows are cleared to integers and reduced by fraction-free elimination
//! (cross-multiplication followed by removal of the row content), so no
//! rational arithmetic happens until back-substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;

/// Row echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// Fraction-free row reduction; pivots are chosen as the first nonzero entry
/// scanning rows top-down, so the result is deterministic.
pub fn echelon(matrix: &[Vec<Rat>], ncols: usize) -> Echelon {
    let mut rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            let mut v = integer_row(r);
            make_primitive(&mut v);
            v
        })
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let (head, tail) = rows.split_at_mut(top + 1);
        let prow = &head[top];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = prow[col].gcd(&row[col]);
            let a = &prow[col] / &g;
            let b = &row[col] / &g;
            for j in col..ncols {
                row[j] = &a * &row[j] - &b * &prow[j];
            }
            make_primitive(row);
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    Echelon { rows, pivots, ncols }
}

pub fn rank(matrix: &[Vec<Rat>], ncols: usize) -> usize {
    echelon(matrix, ncols).pivots.len()
}

/// Basis of `{ v : M v = 0 }`, one vector per free column with that
/// coordinate equal to 1 and the other free coordinates 0.
pub fn kernel(matrix: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let ech = echelon(matrix, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rat::zero(); ncols];
        v[f] = Rat::one();
        for (r, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[r];
            let mut acc = Rat::zero();
            for j in pc + 1..ncols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    acc += Rat::from_integer(row[j].clone()) * &v[j];
                }
            }
            v[pc] = -acc / Rat::from_integer(row[pc].clone());
        }
        basis.push(v);
    }
    basis
}

/// Scales a vector to coprime integers with its first nonzero entry positive.
pub fn primitive_vector(v: &[Rat]) -> Vec<Rat> {
    let Some(first) = v.iter().find(|c| !c.is_zero()) else {
        return v.to_vec();
    };
    let ints = integer_row(v);
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if first.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| Rat::from_integer(c / &g * &sign)).collect()
}

/// Determinant of a 3x3 rational matrix.
pub fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Adjugate of a 3x3 matrix: `M * adj(M) = det(M) * I`.
pub fn adjugate3(m: &[[Rat; 3]; 3]) -> [[Rat; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            // cofactor of (j, i)
            let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
            let minor = &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]] - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]];
            if (i + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
    })
}

pub fn mat3_vec(m: &[[Rat; 3]; 3], v: &[Rat; 3]) -> [Rat; 3] {
    std::array::from_fn(|i| &m[i][0] * &v[0] + &m[i][1] * &v[1] + &m[i][2] * &v[2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ri(v: i64) -> Rat {
        Rat::from_integer(v.into())
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m: Vec<Vec<Rat>> = (0..3).map(|i| (0..3).map(|j| ri((i == j) as i64)).collect()).collect();
        assert!(kernel(&m, 3).is_empty());
        assert_eq!(rank(&m, 3), 3);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = vec![vec![ri(0); 5]; 2];
        assert_eq!(kernel(&m, 5).len(), 5);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = vec![
            vec![ri(1), ri(2), ri(3), ri(4)],
            vec![ri(2), ri(4), ri(7), Rat::new(1.into(), 3.into())],
        ];
        let k = kernel(&m, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let s: Rat = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn adjugate_inverts() {
        let m = [[ri(2), ri(1), ri(0)], [ri(0), ri(3), ri(1)], [ri(1), ri(0), ri(1)]];
        let a = adjugate3(&m);
        let d = det3(&m);
        for i in 0..3 {
            for j in 0..3 {
                let s: Rat = (0..3).map(|k| &m[i][k] * &a[k][j]).sum();
                assert_eq!(s, if i == j { d.clone() } else { ri(0) });
            }
        }
    }
}
