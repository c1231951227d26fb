use serde::{Deserialize, Serialize};

use super::{unit, AffineWeylElement, RootData};
use crate::cone_series::RationalCone;
use crate::error::Result;

/// Which cone of "dominant affine coweights" in `L_aff` to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConeConvention {
    /// `a >= 0` and `<alpha_i, l> >= 0` for all simple roots.
    #[default]
    Level,
    /// `<alpha_i, l> >= 0` and `a >= <theta, l>`.
    Theta,
}

impl std::str::FromStr for ConeConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "level" | "level-bounded" => Ok(ConeConvention::Level),
            "theta" | "theta-bounded" => Ok(ConeConvention::Theta),
            other => Err(format!("unknown cone convention {other:?} (expected level|theta)")),
        }
    }
}

impl RootData {
    /// The cone `Q_+` in `L_aff`, coordinates `(a, l)`.
    pub fn dominant_affine_cone(&self, convention: ConeConvention) -> Result<RationalCone> {
        let n = self.rank();
        let mut fs: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let alpha = unit(n, i);
                let mut f = vec![0];
                f.extend((0..n).map(|k| self.pairing(&alpha, &unit(n, k))));
                f
            })
            .collect();
        let mut level = vec![1];
        match convention {
            ConeConvention::Level => level.extend(std::iter::repeat_n(0, n)),
            ConeConvention::Theta => {
                level.extend((0..n).map(|k| -self.pairing(self.highest_root(), &unit(n, k))))
            }
        }
        fs.insert(0, level);
        RationalCone::from_inequalities(&fs, n + 1)
    }

    /// `Q(x)`: the image of `Q_+` under the action of `x` on `L_aff`.
    pub fn cone_q(&self, x: &AffineWeylElement, convention: ConeConvention) -> Result<RationalCone> {
        self.dominant_affine_cone(convention)?.image(&self.laff_matrix(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Coweight;

    #[test]
    fn a1_cones() {
        let rd = RootData::preset("A1").unwrap();
        let q = rd.dominant_affine_cone(ConeConvention::Level).unwrap();
        assert_eq!(q, RationalCone::from_generators(&[vec![1, 0], vec![0, 1]]).unwrap());
        let qs = rd.cone_q(&rd.affine_generator(1), ConeConvention::Level).unwrap();
        assert_eq!(qs, RationalCone::from_generators(&[vec![1, 0], vec![0, -1]]).unwrap());
        let t = AffineWeylElement::translation(Coweight(vec![1]));
        let qt = rd.cone_q(&t, ConeConvention::Level).unwrap();
        assert_eq!(qt, RationalCone::from_generators(&[vec![1, 0], vec![2, 1]]).unwrap());
    }

    #[test]
    fn theta_cone_a1() {
        let rd = RootData::preset("A1").unwrap();
        let q = rd.dominant_affine_cone(ConeConvention::Theta).unwrap();
        // l >= 0, a >= 2l
        assert!(q.member(&[2, 1]) && !q.member(&[1, 1]) && q.member(&[1, 0]));
        assert!(q.is_strictly_convex());
    }
}
