//! The standard small groups and extensions used by tests, benches and `selftest`.

use std::sync::Arc;

use crate::exactla::Field;
use crate::groups::{group_algebra, FinGroup, GroupHom};
use crate::hopf_core::FinHopfAlgebra;

/// `1, C2, C3, C4, C2xC2, S3, D4, Q8`.
pub fn groups() -> Vec<(&'static str, FinGroup)> {
    vec![
        ("1", FinGroup::trivial()),
        ("C2", FinGroup::cyclic(2)),
        ("C3", FinGroup::cyclic(3)),
        ("C4", FinGroup::cyclic(4)),
        ("C2xC2", FinGroup::klein_four()),
        ("S3", FinGroup::symmetric3()),
        ("D4", FinGroup::dihedral(4)),
        ("Q8", FinGroup::quaternion()),
    ]
}

/// Group algebras of [`groups`] over `field`; the trivial group gives `𝕜`.
pub fn algebras(field: Field) -> Vec<(String, Arc<FinHopfAlgebra>)> {
    groups()
        .into_iter()
        .map(|(name, g)| {
            let label = if name == "1" {
                "k".to_string()
            } else {
                format!("k[{name}]")
            };
            (label, Arc::new(group_algebra(&g, field)))
        })
        .collect()
}

fn by_generators(g: FinGroup, q: FinGroup, gens: &[(&str, &str)]) -> GroupHom {
    let pairs: Vec<(usize, usize)> = gens
        .iter()
        .map(|(x, y)| {
            (
                g.element_by_label(x).expect("known label"),
                q.element_by_label(y).expect("known label"),
            )
        })
        .collect();
    GroupHom::from_generators(Arc::new(g), Arc::new(q), &pairs).expect("valid homomorphism")
}

pub fn c4_to_c2() -> GroupHom {
    by_generators(FinGroup::cyclic(4), FinGroup::cyclic(2), &[("x", "x")])
}

pub fn q8_to_v4() -> GroupHom {
    GroupHom::quaternion_to_klein()
}

/// `r ↦ a`, `s ↦ b`, kernel `{e, r²}`.
pub fn d4_to_v4() -> GroupHom {
    by_generators(
        FinGroup::dihedral(4),
        FinGroup::klein_four(),
        &[("r", "a"), ("s", "b")],
    )
}

/// The sign map, kernel `A₃`.
pub fn s3_to_c2() -> GroupHom {
    by_generators(
        FinGroup::symmetric3(),
        FinGroup::cyclic(2),
        &[("(12)", "x"), ("(123)", "e")],
    )
}

/// `V₄ → V₄/⟨a⟩`.
pub fn v4_to_c2() -> GroupHom {
    by_generators(
        FinGroup::klein_four(),
        FinGroup::cyclic(2),
        &[("a", "e"), ("b", "x")],
    )
}

/// Extensions used throughout: central and non-central, split and non-split.
pub fn extensions() -> Vec<(&'static str, GroupHom)> {
    let c2 = FinGroup::cyclic(2);
    let s3 = FinGroup::symmetric3();
    let c2s3 = FinGroup::direct_product(&c2, &s3);
    let proj_images = (0..c2s3.order()).map(|x| x % s3.order()).collect();
    let c2xs3_to_s3 = GroupHom::new(Arc::new(c2s3), Arc::new(s3), proj_images).expect("projection");
    vec![
        ("C4->C2", c4_to_c2()),
        ("Q8->C2xC2", q8_to_v4()),
        ("D4->C2xC2", d4_to_v4()),
        ("S3->C2", s3_to_c2()),
        ("C2xC2->C2", v4_to_c2()),
        (
            "C6->C2",
            by_generators(FinGroup::cyclic(6), FinGroup::cyclic(2), &[("x", "x")]),
        ),
        (
            "D4->C2",
            by_generators(
                FinGroup::dihedral(4),
                FinGroup::cyclic(2),
                &[("r", "e"), ("s", "x")],
            ),
        ),
        (
            "Q8->C2",
            by_generators(
                FinGroup::quaternion(),
                FinGroup::cyclic(2),
                &[("i", "e"), ("j", "x")],
            ),
        ),
        ("C2xS3->S3", c2xs3_to_s3),
        (
            "C2xC2->1",
            by_generators(
                FinGroup::klein_four(),
                FinGroup::trivial(),
                &[("a", "e"), ("b", "e")],
            ),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extensions_are_surjective() {
        for (name, phi) in extensions() {
            assert!(phi.is_surjective(), "{name}");
        }
        assert_eq!(d4_to_v4().kernel().len(), 2);
        assert_eq!(s3_to_c2().kernel().len(), 3);
    }
}
