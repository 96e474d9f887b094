//! Brute-force oracles on small finite posets.
//!
//! Everything here works from the bare order relation and the textbook
//! definitions: opens are up-closed sets, Thomason sets are unions of
//! complements of quasi-compact opens, the inverse topology is generated by
//! those complements, and constructible sets form the Boolean algebra
//! generated by the quasi-compact opens. Nothing calls into
//! [`crate::topology`] or [`crate::tt`].

use crate::order::FinitePoset;

/// Largest poset the oracle accepts; families of subsets are `u64` bitsets.
pub const MAX_ORACLE: usize = 6;

/// A family of subsets of an `n ≤ 6` element set, one bit per subset mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Family(pub u64);

impl Family {
    pub fn contains(&self, s: u32) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        (0..64u32).filter(move |&s| self.contains(s))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    fn insert(&mut self, s: u32) {
        self.0 |= 1 << s;
    }
}

/// The topology of a finite poset, computed from scratch.
pub struct Oracle {
    n: usize,
    leq: Vec<Vec<bool>>,
    opens: Family,
    thomason: Family,
    inverse_opens: Family,
    constructible: Family,
}

impl Oracle {
    pub fn new(p: &FinitePoset) -> Self {
        let n = p.len();
        assert!(n <= MAX_ORACLE, "oracle supports at most {MAX_ORACLE} elements");
        let leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| p.leq(i, j)).collect()).collect();
        let full = (1u32 << n) - 1;

        // Opens: x ∈ U and x ≤ y (x specializes y) force y ∈ U.
        let mut opens = Family(0);
        for s in 0..=full {
            let up = (0..n).all(|x| s >> x & 1 == 0 || (0..n).all(|y| !leq[x][y] || s >> y & 1 == 1));
            if up {
                opens.insert(s);
            }
        }
        // A finite space has finitely many opens, so every open is quasi-compact.
        let qc_opens = opens;
        let generators: Vec<u32> = qc_opens.members().map(|u| full & !u).collect();

        let thomason = union_closure(&generators);

        // Inverse topology: finite intersections of generators form a basis.
        let mut basis = Family(0);
        basis.insert(full);
        for &g in &generators {
            let current: Vec<u32> = basis.members().collect();
            for b in current {
                basis.insert(b & g);
            }
        }
        let basis_members: Vec<u32> = basis.members().collect();
        let inverse_opens = union_closure(&basis_members);

        let constructible = boolean_closure(qc_opens, full);

        Self {
            n,
            leq,
            opens,
            thomason,
            inverse_opens,
            constructible,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn is_open(&self, s: u32) -> bool {
        self.opens.contains(s)
    }

    pub fn is_thomason(&self, s: u32) -> bool {
        self.thomason.contains(s)
    }

    pub fn thomason_sets(&self) -> Family {
        self.thomason
    }

    pub fn is_constructible(&self, s: u32) -> bool {
        self.constructible.contains(s)
    }

    pub fn is_inverse_open(&self, s: u32) -> bool {
        self.inverse_opens.contains(s)
    }

    /// `s = w1 ∩ (X \ w2)` for some Thomason `w1`, `w2`.
    pub fn is_weakly_visible(&self, s: u32) -> bool {
        let full = self.full();
        self.thomason
            .members()
            .any(|w1| self.thomason.members().any(|w2| w1 & (full & !w2) == s))
    }

    /// `s = u ∩ c` with `u` open and `c` closed in the inverse topology.
    pub fn is_locally_closed_in_inverse(&self, s: u32) -> bool {
        let full = self.full();
        self.inverse_opens
            .members()
            .any(|u| self.inverse_opens.members().any(|v| u & (full & !v) == s))
    }

    /// Closed sets are the complements of opens.
    pub fn count_closed_sets(&self) -> usize {
        let full = self.full();
        (0..=full).filter(|&s| self.is_open(full & !s)).count()
    }

    /// Points generalizing `x`.
    pub fn generalizations(&self, x: usize) -> u32 {
        (0..self.n).filter(|&y| self.leq[x][y]).fold(0, |m, y| m | 1 << y)
    }

    pub fn weakly_noetherian(&self) -> bool {
        (0..self.n).all(|x| self.is_weakly_visible(1 << x))
    }

    /// Every radical ideal, i.e. Thomason support, has constructible complement.
    pub fn every_radical_fg(&self) -> bool {
        let full = self.full();
        self.thomason.members().all(|w| self.is_constructible(full & !w))
    }

    /// Primes have support `gen(x)^c`, so the complement is `gen(x)`.
    pub fn every_prime_fg(&self) -> bool {
        (0..self.n).all(|x| self.is_constructible(self.generalizations(x)))
    }
}

fn union_closure(generators: &[u32]) -> Family {
    let mut fam = Family(1); // the empty union
    for &g in generators {
        let current: Vec<u32> = fam.members().collect();
        for s in current {
            fam.insert(s | g);
        }
    }
    fam
}

fn boolean_closure(start: Family, full: u32) -> Family {
    let mut fam = start;
    fam.insert(0);
    fam.insert(full);
    loop {
        let members: Vec<u32> = fam.members().collect();
        let before = fam;
        for &a in &members {
            fam.insert(full & !a);
            for &b in &members {
                fam.insert(a | b);
                fam.insert(a & b);
            }
        }
        if fam == before {
            return fam;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_space() {
        // a ≤ b: b is the generic point, {b} is open.
        let p = FinitePoset::build(&["a", "b"], &[("a", "b")]).unwrap();
        let o = Oracle::new(&p);
        assert!(o.is_open(0b10));
        assert!(!o.is_open(0b01));
        assert!(o.is_thomason(0b01));
        assert!(!o.is_thomason(0b10));
        assert!(o.is_constructible(0b01));
        assert_eq!(o.count_closed_sets(), 3);
        assert!(o.weakly_noetherian());
    }

    #[test]
    fn non_convex_subset_of_three_chain() {
        let p = FinitePoset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let o = Oracle::new(&p);
        assert!(!o.is_weakly_visible(0b101));
        assert!(!o.is_locally_closed_in_inverse(0b101));
        assert!(o.is_weakly_visible(0b010));
    }
}
