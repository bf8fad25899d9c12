use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::FinGroup;
use crate::exactla::{smith_normal_form, IntMatrix};

/// A finite abelian group `⊕ ℤ/dᵢ` with `d₁ | d₂ | …`, factors equal to 1 dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroupSNF {
    pub invariant_factors: Vec<u64>,
}

impl AbelianGroupSNF {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// From Smith diagonal entries; panics on a zero entry, which would mean infinite order.
    pub fn from_diagonal<'a>(diag: impl IntoIterator<Item = &'a BigInt>) -> Self {
        let invariant_factors = diag
            .into_iter()
            .filter(|d| !d.is_one())
            .map(|d| {
                assert!(!d.is_zero(), "free summand in a finite abelian group");
                d.abs().to_u64().expect("invariant factor fits in u64")
            })
            .collect();
        AbelianGroupSNF { invariant_factors }
    }

    /// `G/[G,G]` as the cokernel of the relations `e_a + e_b - e_ab`.
    pub fn of_abelianization(g: &FinGroup) -> Self {
        let n = g.order();
        let mut rel = IntMatrix::zeros(n * n, n);
        for a in 0..n {
            for b in 0..n {
                let r = a * n + b;
                for (col, v) in [(a, 1), (b, 1), (g.mul(a, b), -1)] {
                    let old = rel.get(r, col).clone();
                    rel.set(r, col, old + v);
                }
            }
        }
        let snf = smith_normal_form(&rel);
        Self::from_diagonal(&snf.diag)
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn to_group(&self) -> FinGroup {
        let f: Vec<usize> = self.invariant_factors.iter().map(|&d| d as usize).collect();
        if f.is_empty() {
            FinGroup::trivial()
        } else {
            FinGroup::abelian(&f)
        }
    }
}

impl fmt::Display for AbelianGroupSNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelianizations() {
        let inv = |g: FinGroup| g.abelianization_invariants().invariant_factors;
        assert_eq!(inv(FinGroup::symmetric3()), vec![2]);
        assert_eq!(inv(FinGroup::quaternion()), vec![2, 2]);
        assert_eq!(inv(FinGroup::dihedral(4)), vec![2, 2]);
        assert_eq!(inv(FinGroup::cyclic(6)), vec![6]);
        assert_eq!(
            inv(FinGroup::direct_product(
                &FinGroup::cyclic(2),
                &FinGroup::cyclic(4)
            )),
            vec![2, 4]
        );
        assert!(FinGroup::trivial().abelianization_invariants().is_trivial());
    }

    #[test]
    fn orders_match_brute_force() {
        for g in [
            FinGroup::symmetric3(),
            FinGroup::quaternion(),
            FinGroup::dihedral(4),
            FinGroup::dihedral(3),
        ] {
            let ab = g.abelianization_invariants();
            assert_eq!(ab.order() as usize, g.order() / g.derived_subgroup().len());
            assert_eq!(ab.to_group().order() as u64, ab.order());
        }
        assert_eq!(
            AbelianGroupSNF {
                invariant_factors: vec![2, 4]
            }
            .to_string(),
            "Z/2 x Z/4"
        );
    }
}
