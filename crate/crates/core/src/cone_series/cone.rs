use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMat};

/// A rational polyhedral cone `{ sum c_i g_i : c_i >= 0 }` in `Z^d`.
///
/// The facet description is computed at construction: `inequalities` are
/// functionals `f` with `f(x) >= 0` on the cone, `equalities` cut out its
/// linear span when the cone is not full-dimensional.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<Vec<i64>>,
    inequalities: Vec<Vec<i64>>,
    equalities: Vec<Vec<i64>>,
}

impl PartialEq for RationalCone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.contains_cone(other) && other.contains_cone(self)
    }
}

impl Eq for RationalCone {}

impl RationalCone {
    pub fn from_generators(vs: &[Vec<i64>]) -> Result<Self> {
        let dim = vs.first().map(Vec::len).ok_or_else(|| Error::Invalid("cone needs a generator".into()))?;
        if let Some(v) = vs.iter().find(|v| v.len() != dim) {
            return Err(Error::Dimension { expected: dim, got: v.len() });
        }
        let mut generators: Vec<Vec<i64>> = Vec::new();
        for v in vs {
            let p = linalg::primitive(v);
            if !linalg::is_zero(&p) && !generators.contains(&p) {
                generators.push(p);
            }
        }
        let equalities = linalg::nullspace(&generators, dim);
        let r = dim - equalities.len();
        let mut inequalities: Vec<Vec<i64>> = Vec::new();
        if r > 0 {
            for subset in subsets(generators.len(), r - 1) {
                let mut vecs: Vec<Vec<i64>> = subset.iter().map(|&i| generators[i].clone()).collect();
                vecs.extend(equalities.iter().cloned());
                let n = linalg::primitive(&linalg::cross(&vecs, dim));
                if linalg::is_zero(&n) {
                    continue;
                }
                let normal = if generators.iter().all(|g| linalg::dot(&n, g) >= 0) {
                    n
                } else if generators.iter().all(|g| linalg::dot(&n, g) <= 0) {
                    linalg::neg(&n)
                } else {
                    continue;
                };
                if !inequalities.contains(&normal) {
                    inequalities.push(normal);
                }
            }
        }
        Ok(RationalCone { dim, generators, inequalities, equalities })
    }

    /// The cone `{x : f(x) >= 0 for all f}`. Intended for pointed cones;
    /// extreme rays are found as intersections of `d - 1` facets.
    pub fn from_inequalities(fs: &[Vec<i64>], dim: usize) -> Result<Self> {
        let mut rays = Vec::new();
        for subset in subsets(fs.len(), dim - 1) {
            let vecs: Vec<Vec<i64>> = subset.iter().map(|&i| fs[i].clone()).collect();
            let n = linalg::primitive(&linalg::cross(&vecs, dim));
            if linalg::is_zero(&n) {
                continue;
            }
            for cand in [n.clone(), linalg::neg(&n)] {
                if fs.iter().all(|f| linalg::dot(f, &cand) >= 0) && !rays.contains(&cand) {
                    rays.push(cand);
                }
            }
        }
        if rays.is_empty() {
            return Err(Error::Invalid("inequalities define the zero cone".into()));
        }
        rays.sort();
        Self::from_generators(&rays)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn inequalities(&self) -> &[Vec<i64>] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[Vec<i64>] {
        &self.equalities
    }

    pub fn member(&self, x: &[i64]) -> bool {
        x.len() == self.dim
            && self.inequalities.iter().all(|f| linalg::dot(f, x) >= 0)
            && self.equalities.iter().all(|f| linalg::dot(f, x) == 0)
    }

    pub fn contains_cone(&self, other: &RationalCone) -> bool {
        other.generators.iter().all(|g| self.member(g))
    }

    /// A cone contains a line iff some generator's negative lies in it.
    pub fn is_strictly_convex(&self) -> bool {
        self.generators.iter().all(|g| !self.member(&linalg::neg(g)))
    }

    /// Image under an integer matrix.
    pub fn image(&self, m: &IntMat) -> Result<Self> {
        let gens: Vec<Vec<i64>> = self.generators.iter().map(|g| linalg::mat_vec(m, g)).collect();
        Self::from_generators(&gens)
    }

    /// The sum of the facet normals; strictly positive on the cone minus
    /// the origin whenever the cone is strictly convex.
    pub fn default_functional(&self) -> Result<Vec<i64>> {
        let h = self.inequalities.iter().fold(vec![0; self.dim], |acc, f| linalg::add(&acc, f));
        if self.generators.iter().all(|g| linalg::dot(&h, g) > 0) {
            Ok(h)
        } else {
            Err(Error::Invalid("cone is not strictly convex".into()))
        }
    }

    /// Lattice points `x` with `x - shift` in the cone and `h(x - shift) <= n`,
    /// found by scanning a bounding box. Sorted.
    pub fn points_up_to(&self, shift: &[i64], h: &[i64], n: i64) -> Vec<Vec<i64>> {
        let min_h = self.generators.iter().map(|g| linalg::dot(h, g)).min().unwrap_or(1).max(1);
        let reach = n.max(0) / min_h;
        let bound: Vec<i64> = (0..self.dim)
            .map(|j| reach * self.generators.iter().map(|g| g[j].abs()).sum::<i64>())
            .collect();
        let mut out = Vec::new();
        let mut cur: Vec<i64> = bound.iter().map(|b| -b).collect();
        if self.dim == 0 {
            return out;
        }
        loop {
            let h_val = linalg::dot(h, &cur);
            if h_val <= n && self.member(&cur) {
                out.push(linalg::add(&cur, shift));
            }
            let mut k = 0;
            loop {
                if k == self.dim {
                    out.sort();
                    return out;
                }
                cur[k] += 1;
                if cur[k] <= bound[k] {
                    break;
                }
                cur[k] = -bound[k];
                k += 1;
            }
        }
    }
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrant_membership() {
        let c = RationalCone::from_generators(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(c.member(&[2, 3]));
        assert!(!c.member(&[-1, 0]));
        assert!(c.is_strictly_convex());
    }

    #[test]
    fn line_is_not_strictly_convex() {
        let c = RationalCone::from_generators(&[vec![1, 0], vec![-1, 0]]).unwrap();
        assert!(!c.is_strictly_convex());
        assert!(c.member(&[-5, 0]));
        assert!(!c.member(&[0, 1]));
    }

    #[test]
    fn shear_image() {
        let c = RationalCone::from_generators(&[vec![1, 0], vec![0, 1]]).unwrap();
        let img = c.image(&vec![vec![1, 2], vec![0, 1]]).unwrap();
        assert_eq!(img, RationalCone::from_generators(&[vec![1, 0], vec![2, 1]]).unwrap());
    }

    #[test]
    fn ray_cone() {
        let c = RationalCone::from_generators(&[vec![0, 1]]).unwrap();
        assert!(c.member(&[0, 7]));
        assert!(!c.member(&[0, -1]));
        assert!(!c.member(&[1, 1]));
        assert_eq!(c.default_functional().unwrap(), vec![0, 1]);
        assert_eq!(c.points_up_to(&[0, 0], &[0, 1], 3).len(), 4);
    }

    #[test]
    fn from_inequalities_round_trip() {
        // level-bounded A2 dominant cone in (a, l1, l2)
        let fs = vec![vec![1, 0, 0], vec![0, 2, -1], vec![0, -1, 2]];
        let c = RationalCone::from_inequalities(&fs, 3).unwrap();
        assert_eq!(c.generators().len(), 3);
        assert!(c.member(&[0, 2, 1]) && c.member(&[0, 1, 2]) && c.member(&[1, 0, 0]));
        assert!(!c.member(&[0, 1, 0]));
        for g in c.generators() {
            assert!(fs.iter().all(|f| linalg::dot(f, g) >= 0));
        }
    }
}
