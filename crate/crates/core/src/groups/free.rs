use std::fmt;

use super::FinGroup;

/// A reduced word in a free group: letters `(generator, ±1)` with no adjacent inverse pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(i: usize) -> Self {
        FreeWord {
            letters: vec![(i, 1)],
        }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i8)>) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::new();
        for (g, e) in letters {
            assert!(e == 1 || e == -1, "exponents are ±1");
            match out.last() {
                Some(&(h, f)) if h == g && f == -e => {
                    out.pop();
                }
                _ => out.push((g, e)),
            }
        }
        FreeWord { letters: out }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        Self::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inv(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Evaluates the word in `group`, sending generator `i` to `images[i]`.
    pub fn evaluate(&self, group: &FinGroup, images: &[usize]) -> usize {
        self.letters.iter().fold(group.identity(), |acc, &(g, e)| {
            let x = if e > 0 {
                images[g]
            } else {
                group.inv(images[g])
            };
            group.mul(acc, x)
        })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (g, e) in &self.letters {
            if *e > 0 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{g}^-1")?;
            }
        }
        Ok(())
    }
}

/// Group algebra of the free group on a finite set of labels. Hopf maps out of it
/// are determined by where the generators go, so it is handled symbolically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeGroupAlgebra {
    labels: Vec<String>,
}

pub fn free_hopf_on_set(labels: &[String]) -> FreeGroupAlgebra {
    FreeGroupAlgebra {
        labels: labels.to_vec(),
    }
}

impl FreeGroupAlgebra {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The group-like embedding of the generating set.
    pub fn eta(&self, i: usize) -> FreeWord {
        assert!(i < self.rank());
        FreeWord::generator(i)
    }

    /// The counit of the adjunction for `G`: evaluate words with generator `g ↦ g`.
    pub fn counit(&self, group: &FinGroup, w: &FreeWord) -> usize {
        let images: Vec<usize> = (0..group.order()).collect();
        w.evaluate(group, &images)
    }
}

/// For the free group on the elements of `g`: `ε(η(x)) = x` for every element, and
/// `ε` agrees with multiplying the letters in `g` on every word of length `≤ max_len`
/// (so it is a homomorphism there), including products `w·w⁻¹`.
pub fn free_counit_section_check(g: &FinGroup, max_len: usize) -> bool {
    let n = g.order();
    let labels: Vec<String> = g.labels().to_vec();
    let free = free_hopf_on_set(&labels);
    if !(0..n).all(|x| free.counit(g, &free.eta(x)) == x) {
        return false;
    }
    let mut layer: Vec<Vec<(usize, i8)>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * 2 * n);
        for w in &layer {
            for x in 0..n {
                for e in [1i8, -1] {
                    let mut v = w.clone();
                    v.push((x, e));
                    next.push(v);
                }
            }
        }
        for letters in &next {
            let direct = letters.iter().fold(g.identity(), |acc, &(x, e)| {
                g.mul(acc, if e > 0 { x } else { g.inv(x) })
            });
            let w = FreeWord::from_letters(letters.iter().copied());
            if free.counit(g, &w) != direct || !w.mul(&w.inv()).is_empty() {
                return false;
            }
        }
        layer = next;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cancellation() {
        let x = FreeWord::generator(0);
        assert!(x.mul(&x.inv()).is_empty());
        let w = FreeWord::from_letters([(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)]);
        assert_eq!(w, FreeWord::generator(2));
    }

    #[test]
    fn klein_word_evaluates_to_identity() {
        let v4 = FinGroup::klein_four();
        let free = free_hopf_on_set(v4.labels());
        // (a)(b)(ab)⁻¹
        let w = free.eta(1).mul(&free.eta(2)).mul(&free.eta(3).inv());
        assert_eq!(w.len(), 3);
        assert_eq!(free.counit(&v4, &w), v4.identity());
        assert!(free_counit_section_check(&v4, 3));
        assert!(free_counit_section_check(&FinGroup::symmetric3(), 2));
    }

    fn word() -> impl Strategy<Value = Vec<(usize, i8)>> {
        prop::collection::vec((0usize..4, prop_oneof![Just(1i8), Just(-1i8)]), 0..=20)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn word_times_inverse_is_empty(letters in word()) {
            let w = FreeWord::from_letters(letters);
            prop_assert!(w.mul(&w.inv()).is_empty());
            prop_assert!(w.inv().mul(&w).is_empty());
        }

        #[test]
        fn reduced_form_is_reduced(letters in word()) {
            let w = FreeWord::from_letters(letters);
            prop_assert!(w.letters().windows(2).all(|p| !(p[0].0 == p[1].0 && p[0].1 == -p[1].1)));
        }
    }
}
