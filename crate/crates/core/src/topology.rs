//! Decision procedures for the point-set notions on every [`SpaceExpr`].
//!
//! All predicates reduce to per-leaf rules on the normalized expression: a
//! subset of a finite disjoint union is open (closed, quasi-compact open,
//! Thomason, constructible, weakly visible) iff each of its parts is.
//!
//! Leaf rules, with `X` the antichain leaf and `X_inv` its dual:
//!
//! | predicate          | finite poset | `X`                        | `X_inv`                     |
//! |--------------------|--------------|----------------------------|-----------------------------|
//! | open               | up-set       | `∅` or cofinite with `η`   | no `η`, or everything       |
//! | quasi-compact open | up-set       | same as open               | finite without `η`, or all  |
//! | Thomason           | down-set     | no `η`, or everything      | `∅` or cofinite with `η`    |
//! | constructible      | always       | finite without `η`, or cofinite with `η` (both leaves)   |

use crate::error::{Error, Result};
use crate::order::{FiniteSubset, DEFAULT_DOWN_SET_CAP};
use crate::space::{Leaf, Point, PointClass, SpaceExpr};
use crate::subset::{AntichainSubset, ClosedMode, SymbolicSubset};

/// Largest number of listed closed-point indices the Thomason-pair search accepts.
pub const MAX_SEARCH_INDICES: usize = 12;

fn fin(s: &SymbolicSubset) -> &FiniteSubset {
    match s {
        SymbolicSubset::Finite(f) => f,
        _ => unreachable!("carrier already checked"),
    }
}

fn anti(s: &SymbolicSubset) -> &AntichainSubset {
    match s {
        SymbolicSubset::Antichain(a) => a,
        _ => unreachable!("carrier already checked"),
    }
}

fn all_leaves(
    e: &SpaceExpr,
    s: &SymbolicSubset,
    f: impl Fn(Leaf<'_>, &SymbolicSubset) -> bool,
) -> Result<bool> {
    let e = e.normalized();
    Ok(s.zip_leaves(&e)?.into_iter().all(|(_, leaf, part)| f(leaf, part)))
}

fn map_leaves(
    e: &SpaceExpr,
    s: &SymbolicSubset,
    f: impl Fn(Leaf<'_>, &SymbolicSubset) -> SymbolicSubset,
) -> Result<SymbolicSubset> {
    let e = e.normalized();
    let parts: Vec<SymbolicSubset> = s
        .zip_leaves(&e)?
        .into_iter()
        .map(|(_, leaf, part)| f(leaf, part))
        .collect();
    Ok(SymbolicSubset::assemble(&e, &mut parts.into_iter()))
}

fn leaf_open(leaf: Leaf<'_>, s: &SymbolicSubset) -> bool {
    match leaf {
        Leaf::Finite(p) => p.is_up_set(fin(s)),
        Leaf::Antichain { inverse: false } => {
            let a = anti(s);
            a.is_empty() || (a.mode == ClosedMode::Cofinite && a.generic)
        }
        Leaf::Antichain { inverse: true } => {
            let a = anti(s);
            !a.generic || a.is_full()
        }
    }
}

fn leaf_closed(leaf: Leaf<'_>, s: &SymbolicSubset) -> bool {
    leaf_open(leaf, &s.complement())
}

fn leaf_qc_open(leaf: Leaf<'_>, s: &SymbolicSubset) -> bool {
    match leaf {
        // Finite spaces and the antichain leaf: any cover member containing η
        // is cofinite, so every open is quasi-compact.
        Leaf::Finite(_) | Leaf::Antichain { inverse: false } => leaf_open(leaf, s),
        // Complements of the quasi-compact opens of the antichain leaf.
        Leaf::Antichain { inverse: true } => {
            let a = anti(s);
            (a.mode == ClosedMode::Finite && !a.generic) || a.is_full()
        }
    }
}

/// Thomason means open in the inverse topology.
fn leaf_thomason(leaf: Leaf<'_>, s: &SymbolicSubset) -> bool {
    match leaf {
        Leaf::Finite(p) => p.is_down_set(fin(s)),
        Leaf::Antichain { inverse } => leaf_open(Leaf::Antichain { inverse: !inverse }, s),
    }
}

fn leaf_constructible(leaf: Leaf<'_>, s: &SymbolicSubset) -> bool {
    match leaf {
        Leaf::Finite(_) => true,
        Leaf::Antichain { .. } => {
            let a = anti(s);
            (a.mode == ClosedMode::Finite && !a.generic) || (a.mode == ClosedMode::Cofinite && a.generic)
        }
    }
}

fn leaf_closure(leaf: Leaf<'_>, s: &SymbolicSubset) -> SymbolicSubset {
    match leaf {
        Leaf::Finite(p) => SymbolicSubset::Finite(p.down_closure(fin(s))),
        Leaf::Antichain { inverse: false } => {
            let a = anti(s);
            // Closed sets: finite sets of closed points, and everything.
            if a.generic || a.mode == ClosedMode::Cofinite {
                SymbolicSubset::Antichain(AntichainSubset::full())
            } else {
                s.clone()
            }
        }
        Leaf::Antichain { inverse: true } => {
            let a = anti(s);
            // Closed sets: ∅ and anything containing η.
            if a.is_empty() {
                s.clone()
            } else {
                SymbolicSubset::Antichain(a.clone().with_generic(true))
            }
        }
    }
}

fn leaf_generalization_closure(leaf: Leaf<'_>, s: &SymbolicSubset) -> SymbolicSubset {
    match leaf {
        Leaf::Finite(p) => SymbolicSubset::Finite(p.up_closure(fin(s))),
        Leaf::Antichain { inverse } => leaf_closure(Leaf::Antichain { inverse: !inverse }, s),
    }
}

pub fn is_open(e: &SpaceExpr, s: &SymbolicSubset) -> Result<bool> {
    all_leaves(e, s, leaf_open)
}

pub fn is_closed(e: &SpaceExpr, s: &SymbolicSubset) -> Result<bool> {
    all_leaves(e, s, leaf_closed)
}

pub fn is_quasi_compact_open(e: &SpaceExpr, s: &SymbolicSubset) -> Result<bool> {
    all_leaves(e, s, leaf_qc_open)
}

/// Union of complements of quasi-compact opens; equivalently open in the dual.
pub fn is_thomason(e: &SpaceExpr, s: &SymbolicSubset) -> Result<bool> {
    all_leaves(e, s, leaf_thomason)
}

/// Member of the Boolean algebra generated by the quasi-compact opens.
pub fn is_constructible(e: &SpaceExpr, s: &SymbolicSubset) -> Result<bool> {
    all_leaves(e, s, leaf_constructible)
}

pub fn closure(e: &SpaceExpr, s: &SymbolicSubset) -> Result<SymbolicSubset> {
    map_leaves(e, s, leaf_closure)
}

pub fn generalization_closure(e: &SpaceExpr, s: &SymbolicSubset) -> Result<SymbolicSubset> {
    map_leaves(e, s, leaf_generalization_closure)
}

/// `cl{x}` for the representative of a point class.
pub fn closure_of_class(e: &SpaceExpr, class: &PointClass) -> Result<SymbolicSubset> {
    closure_of_point(e, &class.representative())
}

/// `gen{x}` for the representative of a point class.
pub fn generalizations_of_class(e: &SpaceExpr, class: &PointClass) -> Result<SymbolicSubset> {
    generalizations_of_point(e, &class.representative())
}

pub fn closure_of_point(e: &SpaceExpr, point: &Point) -> Result<SymbolicSubset> {
    closure(e, &point.singleton(e)?)
}

pub fn generalizations_of_point(e: &SpaceExpr, point: &Point) -> Result<SymbolicSubset> {
    generalization_closure(e, &point.singleton(e)?)
}

/// Open in its closure, i.e. `cl(s) \ s` is closed.
pub fn is_locally_closed(e: &SpaceExpr, s: &SymbolicSubset) -> Result<bool> {
    let rest = closure(e, s)?.difference(s)?;
    is_closed(e, &rest)
}

/// The Thomason sets a visibility search ranges over on one leaf.
///
/// Finite leaves: every down-set. Antichain leaves: descriptors whose listed
/// indices are drawn from those of `v`. Both families are closed under union.
fn thomason_candidates(leaf: Leaf<'_>, v: &SymbolicSubset) -> Result<Vec<SymbolicSubset>> {
    match leaf {
        Leaf::Finite(p) => Ok(p
            .down_sets(DEFAULT_DOWN_SET_CAP)?
            .map(SymbolicSubset::Finite)
            .collect()),
        Leaf::Antichain { .. } => {
            let base: Vec<u64> = anti(v).indices.iter().copied().collect();
            if base.len() > MAX_SEARCH_INDICES {
                return Err(Error::CapExceeded {
                    what: "index set for the Thomason-pair search",
                    size: base.len(),
                    cap: MAX_SEARCH_INDICES,
                });
            }
            let mut out = Vec::new();
            for bits in 0u64..1 << base.len() {
                let chosen = base
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &k)| k);
                for mode in [ClosedMode::Finite, ClosedMode::Cofinite] {
                    for generic in [false, true] {
                        let c = SymbolicSubset::Antichain(AntichainSubset::new(
                            mode,
                            chosen.clone(),
                            generic,
                        ));
                        if leaf_thomason(leaf, &c) {
                            out.push(c);
                        }
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Looks for Thomason `w1`, `w2` in `candidates` with `v = w1 \ w2`.
///
/// Since the family is closed under unions, the union of every candidate
/// disjoint from `v` is the largest usable `w2`.
fn search_pair(
    candidates: &[SymbolicSubset],
    v: &SymbolicSubset,
) -> Option<(SymbolicSubset, SymbolicSubset)> {
    let first = candidates.first()?;
    let mut w2 = first.difference(first).expect("same leaf");
    for c in candidates {
        if c.intersection(v).expect("same leaf").is_empty() {
            w2 = w2.union(c).expect("same leaf");
        }
    }
    candidates
        .iter()
        .filter(|w1| v.is_subset(w1).expect("same leaf"))
        .find(|w1| w1.difference(&w2).expect("same leaf") == *v)
        .map(|w1| (w1.clone(), w2))
}

/// Weak visibility by searching Thomason pairs `(w1, w2)` with `s = w1 ∩ (X \ w2)`.
///
/// Returns the pair found, or `None` when `s` is not weakly visible. Fails
/// with [`Error::CapExceeded`] when the search range is too large.
pub fn weakly_visible_pair(
    e: &SpaceExpr,
    s: &SymbolicSubset,
) -> Result<Option<(SymbolicSubset, SymbolicSubset)>> {
    let e = e.normalized();
    let mut firsts = Vec::new();
    let mut seconds = Vec::new();
    for (_, leaf, part) in s.zip_leaves(&e)? {
        let candidates = thomason_candidates(leaf, part)?;
        match search_pair(&candidates, part) {
            Some((w1, w2)) => {
                firsts.push(w1);
                seconds.push(w2);
            }
            None => return Ok(None),
        }
    }
    let w1 = SymbolicSubset::assemble(&e, &mut firsts.into_iter());
    let w2 = SymbolicSubset::assemble(&e, &mut seconds.into_iter());
    Ok(Some((w1, w2)))
}

/// Weak visibility as local closedness in the inverse space.
pub fn is_weakly_visible_via_inverse(e: &SpaceExpr, s: &SymbolicSubset) -> Result<bool> {
    is_locally_closed(&e.dual(), s)
}

/// Decides weak visibility by both routes and insists they agree. When the
/// pair search is out of range only the inverse route is used.
pub fn is_weakly_visible(e: &SpaceExpr, s: &SymbolicSubset) -> Result<bool> {
    Ok(visibility(e, s)?.0)
}

fn visibility(
    e: &SpaceExpr,
    s: &SymbolicSubset,
) -> Result<(bool, Option<(SymbolicSubset, SymbolicSubset)>)> {
    let by_inverse = is_weakly_visible_via_inverse(e, s)?;
    match weakly_visible_pair(e, s) {
        Ok(pair) => {
            if pair.is_some() != by_inverse {
                return Err(Error::InternalInconsistency(format!(
                    "weak visibility of {s:?} in {e:?}: pair search says {}, inverse topology says {by_inverse}",
                    pair.is_some()
                )));
            }
            Ok((by_inverse, pair))
        }
        Err(Error::CapExceeded { .. }) => Ok((by_inverse, None)),
        Err(other) => Err(other),
    }
}

/// A strictly descending chain of closed sets `Z_0 ⊋ Z_1 ⊋ …`, witnessing
/// that a space is not Noetherian. `Z_k` removes `c_0 … c_{k-1}` from one
/// inverse antichain leaf and keeps every other summand whole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescendingChain {
    pub space: SpaceExpr,
    pub path: Vec<usize>,
}

impl DescendingChain {
    pub fn member(&self, k: u64) -> SymbolicSubset {
        SymbolicSubset::from_leaves(&self.space, |path, leaf| {
            if path == self.path.as_slice() {
                SymbolicSubset::Antichain(AntichainSubset::cofinite(0..k, true))
            } else {
                SymbolicSubset::leaf_full(leaf)
            }
        })
    }

    /// Checks the first `n` members: each closed, each strictly inside the previous.
    pub fn check(&self, n: u64) -> Result<bool> {
        let mut prev: Option<SymbolicSubset> = None;
        for k in 0..n {
            let z = self.member(k);
            if !is_closed(&self.space, &z)? {
                return Ok(false);
            }
            if let Some(p) = &prev {
                if !z.is_subset(p)? || z == *p {
                    return Ok(false);
                }
            }
            prev = Some(z);
        }
        Ok(true)
    }
}

/// Noetherianity by leaf family. Only the inverse antichain leaf fails.
pub fn noetherian(e: &SpaceExpr) -> (bool, Option<DescendingChain>) {
    let e = e.normalize();
    let bad = e
        .leaves()
        .into_iter()
        .find(|(_, leaf)| matches!(leaf, Leaf::Antichain { inverse: true }))
        .map(|(path, _)| path);
    match bad {
        Some(path) => (false, Some(DescendingChain { space: e.clone(), path })),
        None => (true, None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisibilityWitness {
    pub class: PointClass,
    pub visible: bool,
    /// Thomason `(w1, w2)` with `{x} = w1 \ w2`, when the search ran and succeeded.
    pub pair: Option<(SymbolicSubset, SymbolicSubset)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceProps {
    pub is_finite: bool,
    pub is_noetherian: bool,
    pub is_inverse_noetherian: bool,
    pub is_weakly_noetherian: bool,
    /// Closed sets of the space, present when it is not Noetherian.
    pub descending_chain: Option<DescendingChain>,
    /// Closed sets of the dual, present when the space is not inverse-Noetherian.
    pub inverse_descending_chain: Option<DescendingChain>,
    /// One entry per point class.
    pub visibility: Vec<VisibilityWitness>,
}

impl SpaceProps {
    pub fn invisible_class(&self) -> Option<&PointClass> {
        self.visibility.iter().find(|w| !w.visible).map(|w| &w.class)
    }
}

pub fn space_props(e: &SpaceExpr) -> Result<SpaceProps> {
    let e = e.normalize();
    let (is_noetherian, descending_chain) = noetherian(&e);
    let (is_inverse_noetherian, inverse_descending_chain) = noetherian(&e.dual());
    let mut visibility = Vec::new();
    for class in e.point_classes() {
        let single = class.representative().singleton(&e)?;
        let (visible, pair) = self::visibility(&e, &single)?;
        visibility.push(VisibilityWitness {
            class,
            visible,
            pair,
        });
    }
    let is_weakly_noetherian = visibility.iter().all(|w| w.visible);
    let is_finite = e.is_finite();
    if is_finite != (is_weakly_noetherian && is_inverse_noetherian) {
        return Err(Error::InternalInconsistency(format!(
            "{e:?}: finite = {is_finite} but weakly Noetherian = {is_weakly_noetherian}, \
             inverse-Noetherian = {is_inverse_noetherian}"
        )));
    }
    Ok(SpaceProps {
        is_finite,
        is_noetherian,
        is_inverse_noetherian,
        is_weakly_noetherian,
        descending_chain,
        inverse_descending_chain,
        visibility,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::FinitePoset;
    use crate::space::{ClassKind, PointKind};

    fn goa() -> SpaceExpr {
        SpaceExpr::goa()
    }

    fn inv() -> SpaceExpr {
        SpaceExpr::dual_of(SpaceExpr::goa())
    }

    fn a(s: AntichainSubset) -> SymbolicSubset {
        SymbolicSubset::Antichain(s)
    }

    fn chain(n: usize) -> FinitePoset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_index_pairs(FinitePoset::default_labels(n), &pairs).unwrap()
    }

    /// Descriptor shapes with listed indices from `{0, …, k-1}`.
    fn shapes(k: u32) -> Vec<AntichainSubset> {
        let mut out = Vec::new();
        for bits in 0u64..1 << k {
            let idx: Vec<u64> = (0..k as u64).filter(|i| bits >> i & 1 == 1).collect();
            for mode in [ClosedMode::Finite, ClosedMode::Cofinite] {
                for generic in [false, true] {
                    out.push(AntichainSubset::new(mode, idx.iter().copied(), generic));
                }
            }
        }
        out
    }

    /// `s` is a union of members of `family` iff every point of `s` lies in
    /// some member inside `s`. Points are checked on listed indices, one
    /// fresh index standing for the tail, and `η`.
    fn is_union_of(s: &AntichainSubset, family: &[AntichainSubset], fresh: u64) -> bool {
        let inside = |g: &AntichainSubset| g.is_subset(s);
        let mut probes: Vec<u64> = s.indices.iter().copied().collect();
        probes.push(fresh);
        let closed_ok = probes
            .iter()
            .filter(|&&k| s.contains_closed(k))
            .all(|&k| family.iter().any(|g| g.contains_closed(k) && inside(g)));
        let generic_ok = !s.generic || family.iter().any(|g| g.generic && inside(g));
        closed_ok && generic_ok
    }

    #[test]
    fn finite_open_is_up_set() {
        let p = chain(3);
        let e = SpaceExpr::finite(p.clone());
        for s in FiniteSubset::all(3) {
            let sym = SymbolicSubset::Finite(s);
            assert_eq!(is_open(&e, &sym).unwrap(), p.is_up_set(&s));
            assert_eq!(is_quasi_compact_open(&e, &sym).unwrap(), p.is_up_set(&s));
            assert_eq!(is_thomason(&e, &sym).unwrap(), p.is_down_set(&s));
            assert!(is_constructible(&e, &sym).unwrap());
        }
    }

    #[test]
    fn goa_open_sets() {
        assert!(is_open(&goa(), &a(AntichainSubset::cofinite([3], true))).unwrap());
        assert!(!is_open(&goa(), &a(AntichainSubset::generic_only())).unwrap());
        // Every nonempty open is cofinite and contains η.
        for s in shapes(3) {
            let expect = s.is_empty() || (s.mode == ClosedMode::Cofinite && s.generic);
            assert_eq!(is_open(&goa(), &a(s)).unwrap(), expect);
        }
    }

    #[test]
    fn quasi_compact_open_matches_constructible_and_generalization_closed() {
        for e in [goa(), inv()] {
            for s in shapes(3) {
                let s = a(s);
                let gen = generalization_closure(&e, &s).unwrap();
                let expect = is_constructible(&e, &s).unwrap() && gen == s;
                assert_eq!(is_quasi_compact_open(&e, &s).unwrap(), expect, "{e:?} {s:?}");
            }
        }
        // Finite leaves too.
        let p = chain(3);
        let e = SpaceExpr::finite(p);
        for s in FiniteSubset::all(3) {
            let s = SymbolicSubset::Finite(s);
            let gen = generalization_closure(&e, &s).unwrap();
            assert_eq!(is_quasi_compact_open(&e, &s).unwrap(), gen == s);
        }
    }

    #[test]
    fn inverse_qc_opens_are_complements_of_goa_qc_opens() {
        let all = shapes(3);
        for s in &all {
            let expect = is_quasi_compact_open(&goa(), &a(s.complement())).unwrap();
            assert_eq!(is_quasi_compact_open(&inv(), &a(s.clone())).unwrap(), expect);
        }
        assert!(is_quasi_compact_open(&inv(), &a(AntichainSubset::finite([0, 4], false))).unwrap());
        assert!(!is_quasi_compact_open(&inv(), &a(AntichainSubset::all_closed_points())).unwrap());
    }

    #[test]
    fn thomason_is_union_of_complements_of_qc_opens() {
        for e in [goa(), inv()] {
            let generators: Vec<AntichainSubset> = shapes(4)
                .into_iter()
                .filter(|g| is_quasi_compact_open(&e, &a(g.clone())).unwrap())
                .map(|g| g.complement())
                .collect();
            for s in shapes(3) {
                let expect = is_union_of(&s, &generators, 3);
                assert_eq!(is_thomason(&e, &a(s.clone())).unwrap(), expect, "{e:?} {s:?}");
            }
        }
        assert!(is_thomason(&goa(), &a(AntichainSubset::finite([0, 5], false))).unwrap());
        assert!(!is_thomason(&goa(), &a(AntichainSubset::generic_only())).unwrap());
        assert!(is_thomason(&goa(), &a(AntichainSubset::empty())).unwrap());
        assert!(is_thomason(&goa(), &a(AntichainSubset::full())).unwrap());
    }

    #[test]
    fn constructible_is_the_generated_boolean_algebra() {
        // Close the quasi-compact opens with indices < 3 under Boolean operations.
        for e in [goa(), inv()] {
            let mut algebra: Vec<AntichainSubset> = shapes(3)
                .into_iter()
                .filter(|g| is_quasi_compact_open(&e, &a(g.clone())).unwrap())
                .collect();
            loop {
                let mut next = algebra.clone();
                for x in &algebra {
                    next.push(x.complement());
                    for y in &algebra {
                        next.push(x.union(y));
                        next.push(x.intersection(y));
                    }
                }
                next.sort();
                next.dedup();
                if next.len() == algebra.len() {
                    break;
                }
                algebra = next;
            }
            for s in shapes(3) {
                assert_eq!(
                    is_constructible(&e, &a(s.clone())).unwrap(),
                    algebra.contains(&s),
                    "{s:?}"
                );
            }
        }
        assert!(!is_constructible(&goa(), &a(AntichainSubset::generic_only())).unwrap());
        assert!(!is_constructible(&goa(), &a(AntichainSubset::finite([0], true))).unwrap());
    }

    #[test]
    fn closures_on_antichain_leaves() {
        let eta = PointClass {
            path: vec![],
            kind: ClassKind::Generic,
        };
        let closed = PointClass {
            path: vec![],
            kind: ClassKind::ClosedPoints,
        };
        assert_eq!(closure_of_class(&goa(), &eta).unwrap(), a(AntichainSubset::full()));
        assert_eq!(
            generalizations_of_class(&goa(), &eta).unwrap(),
            a(AntichainSubset::generic_only())
        );
        assert_eq!(
            generalizations_of_class(&goa(), &closed).unwrap(),
            a(AntichainSubset::finite([0], true))
        );
        assert_eq!(
            generalizations_of_class(&inv(), &closed).unwrap(),
            a(AntichainSubset::finite([0], false))
        );
        // gen in the dual equals closure in the original.
        for s in shapes(3) {
            let s = a(s);
            assert_eq!(
                generalization_closure(&inv(), &s).unwrap(),
                closure(&goa(), &s).unwrap()
            );
        }
    }

    #[test]
    fn every_point_of_a_finite_space_is_weakly_visible() {
        for n in 0..=4 {
            let e = SpaceExpr::finite(chain(n));
            for class in e.point_classes() {
                let s = class.representative().singleton(&e).unwrap();
                assert!(is_weakly_visible(&e, &s).unwrap());
            }
        }
    }

    #[test]
    fn non_convex_subset_of_a_chain_is_not_weakly_visible() {
        let e = SpaceExpr::finite(chain(3));
        let s = SymbolicSubset::Finite(FiniteSubset::from_indices(3, [0, 2]).unwrap());
        assert!(!is_weakly_visible(&e, &s).unwrap());
        assert_eq!(weakly_visible_pair(&e, &s).unwrap(), None);
    }

    #[test]
    fn generic_point_of_goa_is_weakly_visible() {
        let s = a(AntichainSubset::generic_only());
        let (w1, w2) = weakly_visible_pair(&goa(), &s).unwrap().unwrap();
        assert!(is_thomason(&goa(), &w1).unwrap());
        assert!(is_thomason(&goa(), &w2).unwrap());
        assert_eq!(w1.difference(&w2).unwrap(), s);
        assert_eq!(w1, a(AntichainSubset::full()));
        assert_eq!(w2, a(AntichainSubset::all_closed_points()));
    }

    #[test]
    fn generic_point_of_inverse_goa_is_not_weakly_visible() {
        let s = a(AntichainSubset::generic_only());
        assert!(!is_weakly_visible(&inv(), &s).unwrap());
        assert!(is_weakly_visible(&inv(), &a(AntichainSubset::finite([2], false))).unwrap());
    }

    #[test]
    fn both_visibility_routes_agree_on_descriptor_shapes() {
        for e in [goa(), inv()] {
            for s in shapes(3) {
                let s = a(s);
                let pair = weakly_visible_pair(&e, &s).unwrap();
                assert_eq!(pair.is_some(), is_weakly_visible_via_inverse(&e, &s).unwrap());
                if let Some((w1, w2)) = pair {
                    assert!(is_thomason(&e, &w1).unwrap() && is_thomason(&e, &w2).unwrap());
                    assert_eq!(w1.difference(&w2).unwrap(), s);
                }
            }
        }
    }

    /// The search draws indices only from the target. Widening the range with
    /// extra indices never finds a pair the narrow search missed.
    #[test]
    fn restricted_index_search_is_complete_on_truncations() {
        for e in [goa(), inv()] {
            let leaf = e.leaves()[0].1;
            let wide: Vec<SymbolicSubset> = shapes(4)
                .into_iter()
                .map(a)
                .filter(|c| leaf_thomason(leaf, c))
                .collect();
            for s in shapes(2) {
                let s = a(s);
                let narrow = weakly_visible_pair(&e, &s).unwrap().is_some();
                let brute = wide.iter().any(|w1| {
                    wide.iter()
                        .any(|w2| w1.difference(w2).unwrap() == s)
                });
                assert_eq!(narrow, brute, "{e:?} {s:?}");
            }
        }
    }

    #[test]
    fn props_of_goa() {
        let p = space_props(&goa()).unwrap();
        assert!(!p.is_finite);
        assert!(p.is_noetherian);
        assert!(!p.is_inverse_noetherian);
        assert!(p.is_weakly_noetherian);
        assert!(p.inverse_descending_chain.as_ref().unwrap().check(6).unwrap());
        assert!(p.visibility.iter().all(|w| w.pair.is_some()));
    }

    #[test]
    fn props_of_inverse_goa() {
        let p = space_props(&inv()).unwrap();
        assert!(!p.is_finite);
        assert!(!p.is_noetherian);
        assert!(p.is_inverse_noetherian);
        assert!(!p.is_weakly_noetherian);
        let chain = p.descending_chain.as_ref().unwrap();
        assert!(chain.check(6).unwrap());
        assert_eq!(p.invisible_class().unwrap().kind, ClassKind::Generic);
    }

    #[test]
    fn props_of_finite_leaf() {
        let p = space_props(&SpaceExpr::finite(chain(3))).unwrap();
        assert!(p.is_finite && p.is_noetherian && p.is_inverse_noetherian && p.is_weakly_noetherian);
    }

    #[test]
    fn descending_chain_in_a_sum() {
        let e = SpaceExpr::sum(vec![SpaceExpr::finite(chain(2)), inv()]);
        let (ok, chain) = noetherian(&e);
        assert!(!ok);
        let chain = chain.unwrap();
        assert_eq!(chain.path, vec![1]);
        assert!(chain.check(5).unwrap());
        let z2 = chain.member(2);
        assert!(!z2.contains(&Point {
            path: vec![1],
            kind: PointKind::Closed(1)
        }));
    }

    #[test]
    fn carrier_mismatch_is_reported() {
        let s = SymbolicSubset::Finite(FiniteSubset::empty(2));
        assert_eq!(is_open(&goa(), &s), Err(Error::CarrierMismatch));
        assert_eq!(is_weakly_visible(&goa(), &s), Err(Error::CarrierMismatch));
    }

    #[test]
    fn large_finite_leaf_falls_back_to_inverse_route() {
        let p = FinitePoset::from_index_pairs(FinitePoset::default_labels(24), &[]).unwrap();
        let e = SpaceExpr::finite(p);
        let s = SymbolicSubset::Finite(FiniteSubset::singleton(24, 3).unwrap());
        assert!(matches!(weakly_visible_pair(&e, &s), Err(Error::CapExceeded { .. })));
        assert!(is_weakly_visible(&e, &s).unwrap());
    }
}
