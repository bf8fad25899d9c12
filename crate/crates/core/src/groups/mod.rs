//! Finite groups given by Cayley tables, group algebras, free groups and
//! the bar-resolution homology oracle.

mod abelian;
mod free;
mod homology;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar, Vector};
use crate::hopf_core::{FinHopfAlgebra, HopfData};
use crate::morphism::{CoalgebraMap, HopfMorphism};

pub use abelian::AbelianGroupSNF;
pub use free::{free_counit_section_check, free_hopf_on_set, FreeGroupAlgebra, FreeWord};
pub use homology::{
    bar_boundaries, h2_induced_map, schur_multiplier, schur_multiplier_oracle, transgression,
    CentralExtensionModel, H2Map, SchurMultiplier, DEFAULT_MAX_ORDER,
};

/// A finite group stored as its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FinGroup {
    /// Validates a Cayley table: Latin square, associative, with identity.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if table
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::InvalidGroup(
                "table must be n x n with entries below n".into(),
            ));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let at = |a: usize, b: usize| flat[a * n + b];
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[at(a, b)] = true;
                col[at(b, a)] = true;
            }
            if !row.iter().all(|&x| x) || !col.iter().all(|&x| x) {
                return Err(Error::InvalidGroup(format!(
                    "row or column {a} is not a permutation"
                )));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| at(a, b) == identity)
                    .expect("Latin square")
            })
            .collect();
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::InvalidGroup(format!(
                    "{} labels for {n} elements",
                    l.len()
                )));
            }
            None => (0..n)
                .map(|i| {
                    if i == identity {
                        "e".into()
                    } else {
                        format!("g{i}")
                    }
                })
                .collect(),
        };
        Ok(FinGroup {
            n,
            table: flat,
            identity,
            inverse,
            labels,
        })
    }

    /// Builds a group from elements closed under a product; labels from `label`.
    fn from_closed_set<T: Clone + Eq + std::hash::Hash>(
        elems: Vec<T>,
        mul: impl Fn(&T, &T) -> T,
        label: impl Fn(&T) -> String,
    ) -> Self {
        let index: HashMap<T, usize> = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect())
            .collect();
        let labels = elems.iter().map(label).collect();
        Self::from_table(table, Some(labels)).expect("closed set under an associative product")
    }

    /// The permutation group generated by `gens`, given as 0-based image lists.
    /// Elements are sorted by image tuple, so the identity comes first.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self> {
        let degree = gens.first().map_or(1, |g| g.len());
        if degree > 16 {
            return Err(Error::InvalidGroup(format!("degree {degree} exceeds 16")));
        }
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree
                || g.iter()
                    .any(|&x| x >= degree || std::mem::replace(&mut seen[x], true))
            {
                return Err(Error::InvalidGroup(
                    "generator is not a permutation of the common degree".into(),
                ));
            }
        }
        let compose =
            |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let id: Vec<usize> = (0..degree).collect();
        let mut seen = std::collections::BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = compose(g, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let elems: Vec<Vec<usize>> = seen.into_iter().collect();
        Ok(Self::from_closed_set(elems, compose, |p| cycle_notation(p)))
    }

    pub fn trivial() -> Self {
        Self::from_table(vec![vec![0]], Some(vec!["e".into()])).expect("valid")
    }

    /// `C_n` with elements `e, x, x^2, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let elems: Vec<usize> = (0..n).collect();
        Self::from_closed_set(elems, |a, b| (a + b) % n, |&k| power_label("x", k))
    }

    /// `V₄ = {e, a, b, ab}`.
    pub fn klein_four() -> Self {
        let names = ["e", "a", "b", "ab"];
        Self::from_closed_set((0..4).collect(), |a, b| a ^ b, |&k| names[k].to_string())
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).expect("valid")
    }

    /// Dihedral group of order `2n`, elements `r^i s^j`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..n).map(move |i| (i, j))).collect();
        Self::from_closed_set(
            elems,
            |&(i, a), &(k, b)| {
                let k = if a == 1 { (n - k) % n } else { k };
                ((i + k) % n, (a + b) % 2)
            },
            |&(i, j)| match (i, j) {
                (0, 0) => "e".into(),
                (i, 0) => power_label("r", i),
                (0, _) => "s".into(),
                (i, _) => format!("{}s", power_label("r", i)),
            },
        )
    }

    /// `Q₈ = {1, -1, i, -i, j, -j, k, -k}` in that order.
    pub fn quaternion() -> Self {
        // (sign, unit) with units 1, i, j, k
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let elems: Vec<(usize, bool)> = (0..4).flat_map(|u| [(u, false), (u, true)]).collect();
        Self::from_closed_set(
            elems,
            |&(u, s), &(v, t)| {
                let (neg, w) = UNIT[u][v];
                (w, s ^ t ^ neg)
            },
            |&(u, s)| format!("{}{}", if s { "-" } else { "" }, ["1", "i", "j", "k"][u]),
        )
    }

    /// `G × H` with element `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(g: &FinGroup, h: &FinGroup) -> Self {
        let elems: Vec<(usize, usize)> = (0..g.n)
            .flat_map(|a| (0..h.n).map(move |b| (a, b)))
            .collect();
        Self::from_closed_set(
            elems,
            |&(a, b), &(c, d)| (g.mul(a, c), h.mul(b, d)),
            |&(a, b)| {
                if a == g.identity && b == h.identity {
                    "e".into()
                } else {
                    format!("({},{})", g.label(a), h.label(b))
                }
            },
        )
    }

    /// `ℤ/d₁ × … × ℤ/d_k`, indexed in row-major order of coordinate tuples.
    pub fn abelian(factors: &[usize]) -> Self {
        let order: usize = factors.iter().product();
        let coords = |mut i: usize| -> Vec<usize> {
            let mut c = vec![0; factors.len()];
            for (k, &d) in factors.iter().enumerate().rev() {
                c[k] = i % d;
                i /= d;
            }
            c
        };
        let elems: Vec<Vec<usize>> = (0..order).map(coords).collect();
        Self::from_closed_set(
            elems,
            |a, b| {
                a.iter()
                    .zip(b)
                    .zip(factors)
                    .map(|((x, y), d)| (x + y) % d)
                    .collect()
            },
            |c| {
                if c.len() == 1 {
                    c[0].to_string()
                } else {
                    format!(
                        "({})",
                        c.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                }
            },
        )
    }

    /// Groups by name: `1`, `C<n>`, `V4`, `S3`, `D<n>` (order `2n`), `Q8`, and `x`-separated products.
    pub fn named(name: &str) -> Result<Self> {
        let parts: Vec<&str> = name.split('x').collect();
        if parts.len() > 1 {
            let mut acc = FinGroup::named(parts[0])?;
            for p in &parts[1..] {
                acc = FinGroup::direct_product(&acc, &FinGroup::named(p)?);
            }
            return Ok(acc);
        }
        let num = |s: &str| s.parse::<usize>().ok().filter(|&k| k > 0);
        match name {
            "1" | "trivial" => Ok(FinGroup::trivial()),
            "V4" => Ok(FinGroup::klein_four()),
            "S3" => Ok(FinGroup::symmetric3()),
            "Q8" => Ok(FinGroup::quaternion()),
            _ => match (name.get(..1), name.get(1..).and_then(num)) {
                (Some("C"), Some(k)) => Ok(FinGroup::cyclic(k)),
                (Some("D"), Some(k)) => Ok(FinGroup::dihedral(k)),
                _ => Err(Error::InvalidGroup(format!("unknown group name {name:?}"))),
            },
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.n).filter(|&i| inside[i]).collect()
    }

    /// `[H, K]`, generated by all `[h, k]`.
    pub fn commutator_subgroup(&self, h: &[usize], k: &[usize]) -> Vec<usize> {
        let gens: Vec<usize> = h
            .iter()
            .flat_map(|&a| k.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.subgroup_generated(&gens)
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.n).collect();
        self.commutator_subgroup(&all, &all)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        h.contains(&self.identity)
            && h.iter()
                .all(|&a| h.iter().all(|&b| h.contains(&self.mul(a, self.inv(b)))))
    }

    pub fn is_normal_subgroup(&self, h: &[usize]) -> bool {
        self.is_subgroup(h)
            && (0..self.n).all(|g| {
                h.iter()
                    .all(|&x| h.contains(&self.mul(self.mul(g, x), self.inv(g))))
            })
    }

    /// Invariant factors of `G / [G, G]`.
    pub fn abelianization_invariants(&self) -> AbelianGroupSNF {
        AbelianGroupSNF::of_abelianization(self)
    }

    /// The group of group-like elements of a Hopf algebra, when they span it.
    pub fn from_grouplikes(a: &FinHopfAlgebra) -> Option<(FinGroup, Vec<Vector>)> {
        let gl = a.grouplikes();
        if gl.is_empty() {
            return None;
        }
        let index: HashMap<Vector, usize> = gl
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        let mut table = Vec::with_capacity(gl.len());
        for x in &gl {
            let mut row = Vec::with_capacity(gl.len());
            for y in &gl {
                row.push(*index.get(&a.mul(x, y))?);
            }
            table.push(row);
        }
        let labels = gl.iter().map(|v| element_label(a, v)).collect();
        let g = FinGroup::from_table(table, Some(labels)).ok()?;
        Some((g, gl))
    }

    /// Invariant factors when the group is abelian.
    pub fn abelian_invariants(&self) -> Option<AbelianGroupSNF> {
        self.is_abelian().then(|| self.abelianization_invariants())
    }
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "e".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}

/// Label of a vector: the basis label when it is a single basis element.
fn element_label(a: &FinHopfAlgebra, v: &[Scalar]) -> String {
    let nz: Vec<(usize, &Scalar)> = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
    match nz.as_slice() {
        [(i, c)] if c.is_one() => a.label(*i),
        _ => nz
            .iter()
            .map(|(i, c)| format!("{c}*{}", a.label(*i)))
            .collect::<Vec<_>>()
            .join(" + "),
    }
}

/// 1-based cycle notation, `e` for the identity.
fn cycle_notation(p: &[usize]) -> String {
    let sep = if p.len() > 9 { "," } else { "" };
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![];
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        let _ = write!(out, "({})", cycle.join(sep));
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// A group homomorphism given by the image of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    dom: Arc<FinGroup>,
    cod: Arc<FinGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(dom: Arc<FinGroup>, cod: Arc<FinGroup>, images: Vec<usize>) -> Result<Self> {
        if images.len() != dom.order() || images.iter().any(|&x| x >= cod.order()) {
            return Err(Error::InvalidGroup("image list has the wrong shape".into()));
        }
        for a in 0..dom.order() {
            for b in 0..dom.order() {
                if images[dom.mul(a, b)] != cod.mul(images[a], images[b]) {
                    return Err(Error::InvalidGroup(format!(
                        "not a homomorphism at ({}, {})",
                        dom.label(a),
                        dom.label(b)
                    )));
                }
            }
        }
        Ok(GroupHom { dom, cod, images })
    }

    /// Extends an assignment on generators; fails if it does not define a homomorphism.
    pub fn from_generators(
        dom: Arc<FinGroup>,
        cod: Arc<FinGroup>,
        gens: &[(usize, usize)],
    ) -> Result<Self> {
        let mut images: Vec<Option<usize>> = vec![None; dom.order()];
        images[dom.identity()] = Some(cod.identity());
        let mut queue = VecDeque::from([dom.identity()]);
        while let Some(x) = queue.pop_front() {
            let fx = images[x].expect("visited");
            for &(g, h) in gens {
                let y = dom.mul(x, g);
                let fy = cod.mul(fx, h);
                match images[y] {
                    None => {
                        images[y] = Some(fy);
                        queue.push_back(y);
                    }
                    Some(old) if old != fy => {
                        return Err(Error::InvalidGroup(
                            "generator images do not define a homomorphism".into(),
                        ));
                    }
                    _ => {}
                }
            }
        }
        let images = images
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidGroup("generators do not generate the domain".into()))?;
        Self::new(dom, cod, images)
    }

    pub fn identity(g: &Arc<FinGroup>) -> Self {
        GroupHom {
            dom: g.clone(),
            cod: g.clone(),
            images: (0..g.order()).collect(),
        }
    }

    /// `Q₈ → V₄` with kernel `{1, -1}`: `±i ↦ a`, `±j ↦ b`, `±k ↦ ab`.
    pub fn quaternion_to_klein() -> Self {
        Self::new(
            Arc::new(FinGroup::quaternion()),
            Arc::new(FinGroup::klein_four()),
            vec![0, 0, 1, 1, 2, 2, 3, 3],
        )
        .expect("valid")
    }

    pub fn dom(&self) -> &Arc<FinGroup> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FinGroup> {
        &self.cod
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.dom.order())
            .filter(|&a| self.images[a] == self.cod.identity())
            .collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.images.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.cod.order()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.cod != self.dom {
            return Err(Error::NotComposable(
                "group homomorphisms do not compose".into(),
            ));
        }
        Ok(GroupHom {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            images: first.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    /// Every set section of a surjection, in lexicographic order, capped at `limit`.
    pub fn set_sections(&self, limit: usize) -> Vec<Vec<usize>> {
        let mut fibers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for a in 0..self.dom.order() {
            fibers.entry(self.images[a]).or_default().push(a);
        }
        let q = self.cod.order();
        let mut out = Vec::new();
        let mut choice = vec![0usize; q];
        if fibers.len() != q {
            return out;
        }
        let fib: Vec<&Vec<usize>> = (0..q).map(|x| &fibers[&x]).collect();
        loop {
            out.push((0..q).map(|x| fib[x][choice[x]]).collect());
            if out.len() >= limit {
                return out;
            }
            let mut k = q;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < fib[k].len() {
                    break;
                }
                choice[k] = 0;
            }
        }
    }

    /// The induced Hopf morphism of group algebras.
    pub fn linearize(
        &self,
        dom: &Arc<FinHopfAlgebra>,
        cod: &Arc<FinHopfAlgebra>,
    ) -> Result<HopfMorphism> {
        HopfMorphism::new(
            dom.clone(),
            cod.clone(),
            permutation_matrix(cod.field(), cod.dim(), &self.images),
        )
    }
}

fn permutation_matrix(field: Field, rows: usize, images: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(field, rows, images.len());
    for (j, &i) in images.iter().enumerate() {
        m[(i, j)] = field.one();
    }
    m
}

/// `𝕜[G]` with `Δg = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &FinGroup, field: Field) -> FinHopfAlgebra {
    let n = g.order();
    let one = field.one();
    let mult = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| vec![(g.mul(a, b), one.clone())])
        .collect();
    let mut unit = vec![field.zero(); n];
    unit[g.identity()] = one.clone();
    let data = HopfData {
        field,
        dim: n,
        mult,
        unit,
        comult: (0..n).map(|a| vec![(one.clone(), a, a)]).collect(),
        counit: vec![one.clone(); n],
        antipode: permutation_matrix(field, n, &g.inverse),
        labels: Some(g.labels.clone()),
    };
    FinHopfAlgebra::new(data).expect("group algebras satisfy the axioms")
}

/// Linear extension of a set section `s` of `phi`; a coalgebra map splitting `𝕜[phi]`.
pub fn linearize_section(
    phi: &GroupHom,
    s: &[usize],
    dom: &Arc<FinHopfAlgebra>,
    cod: &Arc<FinHopfAlgebra>,
) -> Result<CoalgebraMap> {
    if s.len() != phi.cod.order()
        || s.iter()
            .enumerate()
            .any(|(q, &g)| g >= phi.dom.order() || phi.apply(g) != q)
    {
        return Err(Error::NotASetSection);
    }
    CoalgebraMap::new(
        cod.clone(),
        dom.clone(),
        permutation_matrix(dom.field(), dom.dim(), s),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    fn zoo() -> Vec<FinGroup> {
        vec![
            FinGroup::trivial(),
            FinGroup::cyclic(2),
            FinGroup::cyclic(3),
            FinGroup::cyclic(4),
            FinGroup::klein_four(),
            FinGroup::symmetric3(),
            FinGroup::dihedral(4),
            FinGroup::quaternion(),
        ]
    }

    #[test]
    fn zoo_orders_and_shapes() {
        let orders: Vec<usize> = zoo().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 6, 8, 8]);
        let q8 = FinGroup::quaternion();
        assert_eq!(q8.center(), vec![0, 1]);
        assert_eq!(q8.derived_subgroup(), vec![0, 1]);
        assert_eq!((0..8).filter(|&a| q8.element_order(a) == 2).count(), 1);
        let d4 = FinGroup::dihedral(4);
        assert_eq!(d4.center().len(), 2);
        assert_eq!(d4.derived_subgroup(), d4.center());
        assert_eq!((0..8).filter(|&a| d4.element_order(a) == 2).count(), 5);
        assert!(!d4.is_abelian());
    }

    #[test]
    fn s3_labels_follow_image_order() {
        let s3 = FinGroup::symmetric3();
        assert_eq!(
            s3.labels(),
            &["e", "(23)", "(12)", "(123)", "(132)", "(13)"]
        );
        assert_eq!(s3.derived_subgroup(), vec![0, 3, 4]);
    }

    #[test]
    fn named_groups() {
        assert_eq!(FinGroup::named("C6").unwrap().order(), 6);
        assert_eq!(FinGroup::named("D4").unwrap().order(), 8);
        assert_eq!(FinGroup::named("C4xC4").unwrap().order(), 16);
        assert!(FinGroup::named("Z9").is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FinGroup::from_table(vec![vec![0, 1], vec![0, 1]], None).is_err());
        assert!(FinGroup::from_table(vec![], None).is_err());
        // Latin square that is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FinGroup::from_table(t, None).is_err());
    }

    #[test]
    fn group_algebras_pass_axioms() {
        for g in zoo() {
            for field in [Q, Field::prime(2).unwrap()] {
                let a = group_algebra(&g, field);
                assert!(a.verify_axioms().is_hopf());
                assert!(a.is_cocommutative());
                assert!(a.antipode().mul(a.antipode()).is_identity());
            }
        }
        assert_eq!(
            group_algebra(&FinGroup::cyclic(2), Q).antipode(),
            &Matrix::identity(Q, 2)
        );
        let k = group_algebra(&FinGroup::trivial(), Q);
        assert_eq!((k.dim(), k.unit()), (1, &vec![Q.one()]));
    }

    #[test]
    fn grouplikes_recover_the_group() {
        let q8 = FinGroup::quaternion();
        let (g, _) = FinGroup::from_grouplikes(&group_algebra(&q8, Q)).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.center().len(), 2);
    }

    #[test]
    fn sections_of_q8_to_v4() {
        let phi = GroupHom::quaternion_to_klein();
        let (a, b) = (
            Arc::new(group_algebra(phi.dom(), Q)),
            Arc::new(group_algebra(phi.cod(), Q)),
        );
        let f = phi.linearize(&a, &b).unwrap();
        let sections: Vec<Vec<usize>> = phi
            .set_sections(usize::MAX)
            .into_iter()
            .filter(|s| s[0] == 0)
            .collect();
        assert_eq!(sections.len(), 8);
        assert_eq!(phi.set_sections(usize::MAX).len(), 16);
        for s in &sections {
            let i = linearize_section(&phi, s, &a, &b).unwrap();
            assert!(i.is_section_of(&f));
        }
        assert_eq!(
            linearize_section(&phi, &[0, 0, 4, 6], &a, &b).unwrap_err(),
            Error::NotASetSection
        );
    }

    #[test]
    fn homomorphism_from_generators() {
        let c4 = Arc::new(FinGroup::cyclic(4));
        let c2 = Arc::new(FinGroup::cyclic(2));
        let f = GroupHom::from_generators(c4.clone(), c2.clone(), &[(1, 1)]).unwrap();
        assert_eq!(f.images(), &[0, 1, 0, 1]);
        assert!(GroupHom::from_generators(c2, c4, &[(1, 1)]).is_err());
    }

    proptest! {
        #[test]
        fn cyclic_products_are_abelian(a in 1usize..6, b in 1usize..6) {
            let g = FinGroup::direct_product(&FinGroup::cyclic(a), &FinGroup::cyclic(b));
            prop_assert!(g.is_abelian());
            prop_assert_eq!(g.order(), a * b);
            prop_assert_eq!(g.derived_subgroup().len(), 1);
        }

        #[test]
        fn inverse_and_power(k in -20i64..20, a in 0usize..8) {
            let g = FinGroup::quaternion();
            prop_assert_eq!(g.mul(g.pow(a, k), g.pow(a, -k)), g.identity());
            prop_assert_eq!(g.pow(a, g.element_order(a) as i64), g.identity());
        }
    }
}
