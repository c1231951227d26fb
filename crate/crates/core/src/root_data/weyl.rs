use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::linalg::{self, IntMat};

/// An element of the finite Weyl group `W`.
///
/// Stored as its action on the coweight lattice (simple-coroot coordinates)
/// and on the root lattice (simple-root coordinates), together with the
/// inverses. Equality only looks at the coweight matrix, which is faithful.
#[derive(Clone, Debug)]
pub struct FiniteWeyl {
    pub(crate) lmat: IntMat,
    pub(crate) rmat: IntMat,
    pub(crate) lmat_inv: IntMat,
    pub(crate) rmat_inv: IntMat,
}

impl PartialEq for FiniteWeyl {
    fn eq(&self, other: &Self) -> bool {
        self.lmat == other.lmat
    }
}

impl Eq for FiniteWeyl {}

impl Hash for FiniteWeyl {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.lmat.hash(state);
    }
}

impl PartialOrd for FiniteWeyl {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteWeyl {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lmat.cmp(&other.lmat)
    }
}

impl FiniteWeyl {
    pub fn identity(rank: usize) -> Self {
        let id = linalg::identity(rank);
        FiniteWeyl { lmat: id.clone(), rmat: id.clone(), lmat_inv: id.clone(), rmat_inv: id }
    }

    /// A reflection, which is its own inverse.
    pub(crate) fn involution(lmat: IntMat, rmat: IntMat) -> Self {
        FiniteWeyl { lmat_inv: lmat.clone(), rmat_inv: rmat.clone(), lmat, rmat }
    }

    pub fn rank(&self) -> usize {
        self.lmat.len()
    }

    pub fn is_identity(&self) -> bool {
        self.lmat == linalg::identity(self.rank())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        FiniteWeyl {
            lmat: linalg::mat_mul(&self.lmat, &rhs.lmat),
            rmat: linalg::mat_mul(&self.rmat, &rhs.rmat),
            lmat_inv: linalg::mat_mul(&rhs.lmat_inv, &self.lmat_inv),
            rmat_inv: linalg::mat_mul(&rhs.rmat_inv, &self.rmat_inv),
        }
    }

    pub fn inv(&self) -> Self {
        FiniteWeyl {
            lmat: self.lmat_inv.clone(),
            rmat: self.rmat_inv.clone(),
            lmat_inv: self.lmat.clone(),
            rmat_inv: self.rmat.clone(),
        }
    }

    /// Action on a coweight.
    pub fn act(&self, l: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.lmat, l)
    }

    /// Action on a root given in simple-root coordinates.
    pub fn act_root(&self, alpha: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.rmat, alpha)
    }

    pub fn act_root_inv(&self, alpha: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.rmat_inv, alpha)
    }

    /// The matrix of the action on the coweight lattice.
    pub fn coweight_matrix(&self) -> &IntMat {
        &self.lmat
    }
}
