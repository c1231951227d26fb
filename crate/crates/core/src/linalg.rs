//! Small exact integer linear algebra used by the lattice and cone code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMat {
    let k = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..k).map(|t| row[t] * b[t][j]).sum()).collect())
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

pub fn scale(a: &[i64], k: i64) -> Vec<i64> {
    a.iter().map(|x| x * k).collect()
}

pub fn is_zero(a: &[i64]) -> bool {
    a.iter().all(|&x| x == 0)
}

/// Divides out the gcd of the entries. Zero stays zero.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Generalized cross product of `d - 1` vectors in dimension `d`: a vector
/// orthogonal to all of them, zero iff they are dependent.
pub fn cross(vs: &[Vec<i64>], d: usize) -> Vec<i64> {
    debug_assert_eq!(vs.len() + 1, d);
    (0..d)
        .map(|k| {
            let minor: IntMat = vs
                .iter()
                .map(|v| v.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect())
                .collect();
            let s = if k % 2 == 0 { 1 } else { -1 };
            (s * det(&minor)) as i64
        })
        .collect()
}

fn to_q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Reduced row echelon form over Q; returns the pivot columns.
fn rref(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..cols {
                    let t = &f * &rows[r][j];
                    rows[i][j] = &rows[i][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Integer basis of `{x : <v, x> = 0 for all v in vs}` in dimension `d`.
pub fn nullspace(vs: &[Vec<i64>], d: usize) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<BigRational>> = vs.iter().map(|v| v.iter().map(|&x| to_q(x)).collect()).collect();
    let pivots = if rows.is_empty() { Vec::new() } else { rref(&mut rows) };
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); d];
            x[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -rows[r][f].clone();
            }
            let l = x.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            let ints: Vec<i64> = x.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer().to_i64().unwrap()).collect();
            primitive(&ints)
        })
        .collect()
}

/// Coordinates of `x` in the span of the independent columns `basis`, if any.
pub fn coords_in_basis(basis: &[Vec<i64>], x: &[i64]) -> Option<Vec<BigRational>> {
    let d = x.len();
    let k = basis.len();
    // rows of the augmented system [B | x]
    let mut rows: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut r: Vec<BigRational> = basis.iter().map(|b| to_q(b[i])).collect();
            r.push(to_q(x[i]));
            r
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![BigRational::zero(); k];
    for (r, &pc) in pivots.iter().enumerate() {
        c[pc] = rows[r][k].clone();
    }
    Some(c)
}

/// Sylvester criterion for a symmetric rational matrix.
pub fn is_positive_definite(m: &[Vec<BigRational>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    // Gaussian elimination without pivoting: all pivots positive iff PD
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] = &a[i][j] - t;
            }
        }
    }
    true
}
