//! The invariant battery behind `hopfkit selftest`.

use std::sync::Arc;

use hopfkit::cleft::{
    analyze_cleft, build_crossed_product, canonical_map_check, Cocycle, MeasuringAction,
};
use hopfkit::exact_seq::{five_term, five_term_with_section};
use hopfkit::galois::{
    compose_sections, grouplike_invariants, h2_direct, is_normal_extension,
    is_trivial_extension_galois, pi1, pi1_from_elements, pullback_section,
    right_divisibility_section,
};
use hopfkit::groups::{
    free_counit_section_check, linearize_section, schur_multiplier, schur_multiplier_oracle,
};
use hopfkit::morphism::{hopf_kernel, induced_on_quotient, is_coalgebra_map};
use hopfkit::subquot::{abelianization, center, huq_commutator, quotient_by_normal};
use hopfkit::{
    group_algebra, zoo, Field, FinGroup, FinHopfAlgebra, GroupHom, HopfMorphism, HopfSubalgebra,
    Matrix, Subspace,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

const Q: Field = Field::Rational;
const CLASS_E_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub cases: usize,
    /// Names of failing cases.
    pub failures: Vec<String>,
}

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, name: impl Into<String>, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures.push(name.into());
        }
    }

    fn finish(self, name: &'static str) -> CheckResult {
        CheckResult {
            name,
            pass: self.failures.is_empty() && self.cases > 0,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

fn ga(g: &FinGroup, field: Field) -> Arc<FinHopfAlgebra> {
    Arc::new(group_algebra(g, field))
}

fn span_of(a: &FinHopfAlgebra, elems: &[usize]) -> Subspace {
    Subspace::span(a.field(), a.dim(), elems.iter().map(|&g| a.basis(g)))
}

fn linearized(phi: &GroupHom) -> (Arc<FinHopfAlgebra>, Arc<FinHopfAlgebra>, HopfMorphism) {
    let (a, b) = (ga(phi.dom(), Q), ga(phi.cod(), Q));
    let f = phi
        .linearize(&a, &b)
        .expect("group homomorphisms linearize");
    (a, b, f)
}

fn axioms() -> CheckResult {
    let mut t = Tally::new();
    for field in [
        Q,
        Field::prime(2).expect("prime"),
        Field::prime(3).expect("prime"),
    ] {
        for (name, a) in zoo::algebras(field) {
            let r = a.verify_axioms();
            let ok = r.is_hopf()
                && r.cocommutative
                && r.antipode_involutive
                && a.antipode().mul(a.antipode()).is_identity();
            t.record(format!("{name}/{field}"), ok);
        }
    }
    t.finish("axioms")
}

fn grouplikes() -> CheckResult {
    let mut t = Tally::new();
    for (name, g) in zoo::groups() {
        let a = ga(&g, Q);
        let gl = a.grouplikes();
        let closed = gl
            .iter()
            .all(|x| gl.iter().all(|y| gl.contains(&a.mul(x, y))));
        t.record(name, gl.len() == g.order() && closed);
    }
    t.finish("grouplikes")
}

fn commutators() -> CheckResult {
    let mut t = Tally::new();
    for (name, g) in zoo::groups() {
        let a = ga(&g, Q);
        let whole = HopfSubalgebra::whole(a.clone());
        let derived = g.derived_subgroup();
        let ok = match (huq_commutator(&whole, &whole), abelianization(&a)) {
            (Ok(d), Ok(h1)) => {
                d.subspace() == &span_of(&a, &derived)
                    && h1.algebra.dim() * derived.len() == g.order()
                    && (d.dim() == 1) == a.is_commutative()
            }
            _ => false,
        };
        t.record(name, ok);
    }
    t.finish("commutators")
}

fn normal_subgroups(g: &FinGroup) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..g.order() {
        for y in 0..g.order() {
            let h = g.subgroup_generated(&[x, y]);
            if g.is_normal_subgroup(&h) && !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}

fn commutator_symmetry() -> CheckResult {
    let mut t = Tally::new();
    for (name, g) in zoo::groups() {
        let a = ga(&g, Q);
        let subs: Vec<HopfSubalgebra> = normal_subgroups(&g)
            .iter()
            .map(|h| HopfSubalgebra::from_subspace(a.clone(), span_of(&a, h)))
            .collect();
        for (i, x) in subs.iter().enumerate() {
            for (j, y) in subs.iter().enumerate() {
                let ok = match (huq_commutator(x, y), huq_commutator(y, x)) {
                    (Ok(xy), Ok(yx)) => xy.subspace() == yx.subspace() && x.is_normal(),
                    _ => false,
                };
                t.record(format!("{name}:{i},{j}"), ok);
            }
        }
    }
    t.finish("commutator_symmetry")
}

fn kernels() -> CheckResult {
    let mut t = Tally::new();
    for (name, phi) in zoo::extensions() {
        let (a, b, f) = linearized(&phi);
        let k = hopf_kernel(&f);
        let ok = k.is_normal()
            && k.subspace() == &span_of(&a, &phi.kernel())
            && quotient_by_normal(&k).is_ok_and(|q| q.algebra.dim() == b.dim())
            && induced_on_quotient(&f, &k).is_ok_and(|m| m.is_isomorphism());
        t.record(name, ok);
    }
    t.finish("kernels")
}

fn normality() -> CheckResult {
    let mut t = Tally::new();
    for (name, phi) in zoo::extensions() {
        let (a, _, f) = linearized(&phi);
        let k = hopf_kernel(&f);
        let central = k.subspace().is_subspace_of(center(&a).subspace());
        let trivial_commutator =
            huq_commutator(&k, &HopfSubalgebra::whole(a.clone())).is_ok_and(|c| c.dim() == 1);
        let group_central = phi.kernel().iter().all(|x| phi.dom().center().contains(x));
        let normal = is_normal_extension(&f).ok();
        let trivial = is_trivial_extension_galois(&f).ok();
        let ok = central == trivial_commutator
            && normal == Some(group_central)
            && trivial.is_some_and(|tr| !tr || group_central);
        t.record(name, ok);
    }
    t.finish("normality")
}

fn cleft() -> CheckResult {
    let mut t = Tally::new();
    for (name, phi) in zoo::extensions() {
        let (a, b, f) = linearized(&phi);
        for (k, s) in phi.set_sections(8).into_iter().enumerate() {
            let ok = linearize_section(&phi, &s, &a, &b)
                .and_then(|i| analyze_cleft(&f, &i))
                .and_then(|d| {
                    let again = analyze_cleft(&d.crossed.pi_h, &d.crossed.i_h)?;
                    Ok(d.psi.is_isomorphism()
                        && d.crossed.algebra.dim() == phi.dom().order()
                        && canonical_map_check(&d).passed()
                        && again.action.matrix() == d.action.matrix()
                        && again.cocycle.matrix() == d.cocycle.matrix())
                })
                .unwrap_or(false);
            t.record(format!("{name}#{k}"), ok);
        }
    }
    t.finish("cleft")
}

/// `k[C₂] #_σ k[C₂]` with `σ(g⊗g) = t` and with trivial `σ`.
fn crossed_products() -> CheckResult {
    let mut t = Tally::new();
    let c2 = ga(&FinGroup::cyclic(2), Q);
    let act = MeasuringAction::trivial(c2.clone(), c2.clone());
    let mut sigma = Matrix::zeros(Q, 2, 4);
    for col in 0..3 {
        sigma[(0, col)] = Q.one();
    }
    sigma[(1, 3)] = Q.one();
    let cases = [
        ("twisted", Cocycle::new(c2.clone(), c2.clone(), sigma), 4),
        ("smash", Ok(Cocycle::trivial(c2.clone(), c2.clone())), 2),
    ];
    for (name, sig, max_order) in cases {
        let ok = sig
            .and_then(|sig| build_crossed_product(&act, &sig))
            .map(|cp| {
                cp.algebra.verify_axioms().is_hopf()
                    && FinGroup::from_grouplikes(&cp.algebra).is_some_and(|(g, _)| {
                        g.order() == 4
                            && (0..4).map(|x| g.element_order(x)).max() == Some(max_order)
                    })
            })
            .unwrap_or(false);
        t.record(name, ok);
    }
    t.finish("crossed_products")
}

fn schur() -> CheckResult {
    let mut t = Tally::new();
    let mut groups: Vec<(String, FinGroup)> = zoo::groups()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    groups.push(("C6".into(), FinGroup::cyclic(6)));
    for (name, g) in groups {
        let ok = match (schur_multiplier(&g, 16), schur_multiplier_oracle(&g)) {
            (Ok(m), Ok(o)) => m.boundary_squared_zero && m.invariants == o,
            _ => false,
        };
        t.record(name, ok);
    }
    t.finish("schur")
}

fn fundamental_group() -> CheckResult {
    let mut t = Tally::new();
    for phi in [zoo::q8_to_v4(), zoo::d4_to_v4()] {
        let (a, b, f) = linearized(&phi);
        let name = format!("{}->{}", phi.dom().order(), phi.cod().order());
        let s = phi.set_sections(1).pop().expect("surjective");
        let ok = linearize_section(&phi, &s, &a, &b)
            .and_then(|i| pi1(&f, Some(&i)))
            .and_then(|r| {
                let m = r.inclusion.matrix();
                let span = Subspace::span(Q, a.dim(), (0..m.cols()).map(|c| m.column(c)));
                let elementwise = pi1_from_elements(&f)?;
                let oracle = schur_multiplier_oracle(phi.cod())?;
                Ok(elementwise.subspace() == &span
                    && grouplike_invariants(&r.algebra)
                        == Some((oracle.order() as usize, oracle.invariant_factors)))
            })
            .unwrap_or(false);
        t.record(name, ok);
    }
    t.finish("fundamental_group")
}

fn h2_backends() -> CheckResult {
    let mut t = Tally::new();
    let mut cases = vec![zoo::q8_to_v4(), zoo::d4_to_v4()];
    for n in [2, 3, 4, 6] {
        cases.push(GroupHom::identity(&Arc::new(FinGroup::cyclic(n))));
    }
    for phi in cases {
        let (a, b, f) = linearized(&phi);
        let name = format!("{}->{}", phi.dom().order(), phi.cod().order());
        let s = phi.set_sections(1).pop().expect("surjective");
        let ok = linearize_section(&phi, &s, &a, &b)
            .and_then(|i| h2_direct(&f, Some(&i)))
            .and_then(|h| {
                let (alg, _) = hopfkit::galois::h2_group(phi.cod(), Q, 16)?;
                Ok(h.algebra().dim() == alg.dim()
                    && grouplike_invariants(h.algebra()) == grouplike_invariants(&alg))
            })
            .unwrap_or(false);
        t.record(name, ok);
    }
    t.finish("h2_backends")
}

fn five_term_exactness() -> CheckResult {
    let mut t = Tally::new();
    for (name, phi) in zoo::extensions() {
        let ok = five_term(&phi, Q, 16)
            .map(|ft| {
                let r = ft.sequence.check_exactness();
                r.is_complex() && r.all_exact()
            })
            .unwrap_or(false);
        t.record(name, ok);
    }
    let control = five_term(&zoo::q8_to_v4(), Q, 16)
        .and_then(|ft| ft.corrupted(0, 1))
        .map(|seq| seq.check_exactness().failing() == vec!["H1(A)"])
        .unwrap_or(false);
    t.record("corrupted Q8->C2xC2", control);
    t.finish("five_term")
}

fn transgression() -> CheckResult {
    let mut t = Tally::new();
    for (name, phi) in zoo::extensions() {
        let mut maps = phi.set_sections(3).into_iter().map(|s| {
            five_term_with_section(&phi, Q, 16, Some(s))
                .map(|ft| ft.connecting_map().matrix().clone())
                .ok()
        });
        let first = maps.next().flatten();
        let ok = first.is_some() && maps.all(|m| m == first);
        t.record(name, ok);
    }
    t.finish("transgression")
}

/// Composable pairs `G → H → K` of standard extensions.
pub fn composable_pairs() -> Vec<(GroupHom, GroupHom)> {
    let to_trivial = |g: FinGroup| {
        let n = g.order();
        GroupHom::new(Arc::new(g), Arc::new(FinGroup::trivial()), vec![0; n]).expect("trivial map")
    };
    let ext = |name: &str| {
        zoo::extensions()
            .into_iter()
            .find(|(n, _)| *n == name)
            .expect("standard extension")
            .1
    };
    vec![
        (ext("Q8->C2xC2"), ext("C2xC2->C2")),
        (ext("D4->C2xC2"), ext("C2xC2->C2")),
        (ext("C2xS3->S3"), ext("S3->C2")),
        (ext("C4->C2"), to_trivial(FinGroup::cyclic(2))),
        (ext("S3->C2"), to_trivial(FinGroup::cyclic(2))),
        (ext("C2xC2->C2"), to_trivial(FinGroup::cyclic(2))),
    ]
}

/// Section witnesses for composition, pullback and right division on one instance.
pub fn class_e_instance(
    phi: &GroupHom,
    psi: &GroupHom,
    rng: &mut ChaCha8Rng,
) -> hopfkit::Result<bool> {
    let pick = |h: &GroupHom, rng: &mut ChaCha8Rng| {
        h.set_sections(64).choose(rng).cloned().expect("surjective")
    };
    let (a, b, c) = (ga(phi.dom(), Q), ga(phi.cod(), Q), ga(psi.cod(), Q));
    let f = phi.linearize(&a, &b)?;
    let g = psi.linearize(&b, &c)?;
    let gf = g.compose(&f)?;
    let s_f = linearize_section(phi, &pick(phi, rng), &a, &b)?;
    let s_g = linearize_section(psi, &pick(psi, rng), &b, &c)?;

    let composite = compose_sections(&s_f, &s_g)?;
    let composed_ok = composite.is_section_of(&gf) && is_coalgebra_map(&c, &a, composite.matrix());

    let (leg, sec) = pullback_section(&g, &s_g, &gf)?;
    let pullback_ok = leg.is_surjective()
        && sec.is_section_of(&leg)
        && is_coalgebra_map(sec.dom(), sec.cod(), sec.matrix());

    let chi = psi.compose(phi)?;
    let t = linearize_section(&chi, &pick(&chi, rng), &a, &c)?;
    let div = right_divisibility_section(&f, &g, &t)?;
    let divisible_ok = div.is_section_of(&g) && is_coalgebra_map(&c, &b, div.matrix());

    Ok(composed_ok && pullback_ok && divisible_ok)
}

fn class_e() -> CheckResult {
    let mut t = Tally::new();
    let pairs = composable_pairs();
    let mut rng = ChaCha8Rng::seed_from_u64(CLASS_E_SEED);
    for k in 0..20 {
        let (phi, psi) = pairs.choose(&mut rng).expect("nonempty");
        let ok = class_e_instance(phi, psi, &mut rng).unwrap_or(false);
        t.record(format!("instance {k}"), ok);
    }
    t.finish("class_e")
}

fn free_groups() -> CheckResult {
    let mut t = Tally::new();
    t.record(
        "C2xC2",
        free_counit_section_check(&FinGroup::klein_four(), 3),
    );
    t.record("S3", free_counit_section_check(&FinGroup::symmetric3(), 2));
    t.finish("free_groups")
}

pub fn run_all() -> Vec<CheckResult> {
    vec![
        axioms(),
        grouplikes(),
        commutators(),
        commutator_symmetry(),
        kernels(),
        normality(),
        cleft(),
        crossed_products(),
        schur(),
        fundamental_group(),
        h2_backends(),
        five_term_exactness(),
        transgression(),
        class_e(),
        free_groups(),
    ]
}

pub fn report(results: &[CheckResult]) -> (Value, bool) {
    let passed = results.iter().filter(|r| r.pass).count();
    let ok = passed == results.len();
    (
        json!({
            "checks": results,
            "passed": passed,
            "total": results.len(),
            "ok": ok,
        }),
        ok,
    )
}
