//! An expression algebra of spectral spaces.
//!
//! Every [`SpaceExpr`] denotes a spectral space: a finite poset, the generic
//! point over a countable antichain of closed points (the homeomorphism type
//! of `Spec(Z)`), a Hochster dual, or a finite disjoint union. After
//! [`SpaceExpr::normalize`] duals only wrap antichain leaves, so every
//! decision procedure works over four leaf shapes.

use std::borrow::Cow;
use std::fmt;

use crate::error::{Error, Result};
use crate::order::FinitePoset;
use crate::subset::{AntichainSubset, SymbolicSubset};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SpaceExpr {
    Finite(FinitePoset),
    /// Closed points `c0, c1, …` under one generic point `η`. Opens are `∅`
    /// and the cofinite sets containing `η`.
    GenericOverAntichain,
    Dual(Box<SpaceExpr>),
    Sum(Vec<SpaceExpr>),
}

/// A leaf of a normalized expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leaf<'a> {
    Finite(&'a FinitePoset),
    /// The antichain space, or its Hochster dual when `inverse` is set.
    Antichain { inverse: bool },
}

impl<'a> Leaf<'a> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Leaf::Finite(_))
    }
}

impl SpaceExpr {
    pub fn finite(p: FinitePoset) -> Self {
        SpaceExpr::Finite(p)
    }

    pub fn goa() -> Self {
        SpaceExpr::GenericOverAntichain
    }

    pub fn dual_of(e: SpaceExpr) -> Self {
        SpaceExpr::Dual(Box::new(e))
    }

    pub fn sum(parts: Vec<SpaceExpr>) -> Self {
        SpaceExpr::Sum(parts)
    }

    /// Rewrites duals: `Dual(Dual x) = x`, `Dual(Finite p) = Finite(p^op)`,
    /// `Dual(Sum xs) = Sum(Dual xs)`. Only `Dual(GenericOverAntichain)` survives.
    pub fn normalize(&self) -> SpaceExpr {
        self.normalize_with(false)
    }

    fn normalize_with(&self, flip: bool) -> SpaceExpr {
        match self {
            SpaceExpr::Finite(p) => SpaceExpr::Finite(if flip { p.opposite() } else { p.clone() }),
            SpaceExpr::GenericOverAntichain => {
                if flip {
                    SpaceExpr::dual_of(SpaceExpr::GenericOverAntichain)
                } else {
                    SpaceExpr::GenericOverAntichain
                }
            }
            SpaceExpr::Dual(inner) => inner.normalize_with(!flip),
            SpaceExpr::Sum(parts) => {
                SpaceExpr::Sum(parts.iter().map(|p| p.normalize_with(flip)).collect())
            }
        }
    }

    pub fn is_normalized(&self) -> bool {
        match self {
            SpaceExpr::Finite(_) | SpaceExpr::GenericOverAntichain => true,
            SpaceExpr::Dual(inner) => matches!(**inner, SpaceExpr::GenericOverAntichain),
            SpaceExpr::Sum(parts) => parts.iter().all(SpaceExpr::is_normalized),
        }
    }

    /// Borrows when already normalized.
    pub fn normalized(&self) -> Cow<'_, SpaceExpr> {
        if self.is_normalized() {
            Cow::Borrowed(self)
        } else {
            Cow::Owned(self.normalize())
        }
    }

    /// The Hochster dual, normalized.
    pub fn dual(&self) -> SpaceExpr {
        self.normalize_with(true)
    }

    /// Whether the denoted space has finitely many points.
    pub fn is_finite(&self) -> bool {
        match self {
            SpaceExpr::Finite(_) => true,
            SpaceExpr::GenericOverAntichain => false,
            SpaceExpr::Dual(inner) => inner.is_finite(),
            SpaceExpr::Sum(parts) => parts.iter().all(SpaceExpr::is_finite),
        }
    }

    /// Leaves of the normalized expression in order, each with its summand path.
    ///
    /// Panics if `self` is not normalized.
    pub fn leaves(&self) -> Vec<(Vec<usize>, Leaf<'_>)> {
        let mut out = Vec::new();
        self.collect_leaves(&mut Vec::new(), &mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Leaf<'a>)>) {
        match self {
            SpaceExpr::Finite(p) => out.push((path.clone(), Leaf::Finite(p))),
            SpaceExpr::GenericOverAntichain => {
                out.push((path.clone(), Leaf::Antichain { inverse: false }))
            }
            SpaceExpr::Dual(inner) => {
                assert!(
                    matches!(**inner, SpaceExpr::GenericOverAntichain),
                    "expression is not normalized"
                );
                out.push((path.clone(), Leaf::Antichain { inverse: true }))
            }
            SpaceExpr::Sum(parts) => {
                for (k, p) in parts.iter().enumerate() {
                    path.push(k);
                    p.collect_leaves(path, out);
                    path.pop();
                }
            }
        }
    }

    /// Looks up the leaf at a summand path of the normalized expression.
    pub fn leaf_at(&self, path: &[usize]) -> Option<Leaf<'_>> {
        match (self, path.split_first()) {
            (SpaceExpr::Sum(parts), Some((&k, rest))) => parts.get(k)?.leaf_at(rest),
            (SpaceExpr::Sum(_), None) => None,
            (_, Some(_)) => None,
            (SpaceExpr::Finite(p), None) => Some(Leaf::Finite(p)),
            (SpaceExpr::GenericOverAntichain, None) => Some(Leaf::Antichain { inverse: false }),
            (SpaceExpr::Dual(inner), None) => match **inner {
                SpaceExpr::GenericOverAntichain => Some(Leaf::Antichain { inverse: true }),
                _ => None,
            },
        }
    }

    /// Partition of the points into symmetry classes; see [`PointClass`].
    pub fn point_classes(&self) -> Vec<PointClass> {
        let e = self.normalized();
        let mut out = Vec::new();
        for (path, leaf) in e.leaves() {
            match leaf {
                Leaf::Finite(p) => out.extend((0..p.len()).map(|i| PointClass {
                    path: path.clone(),
                    kind: ClassKind::Element(i),
                })),
                Leaf::Antichain { .. } => {
                    out.push(PointClass {
                        path: path.clone(),
                        kind: ClassKind::Generic,
                    });
                    out.push(PointClass {
                        path,
                        kind: ClassKind::ClosedPoints,
                    });
                }
            }
        }
        out
    }

    /// Human-readable name of a point, using element labels for finite leaves.
    pub fn describe_point(&self, point: &Point) -> String {
        let e = self.normalized();
        let local = match (&point.kind, e.leaf_at(&point.path)) {
            (PointKind::Element(i), Some(Leaf::Finite(p))) if *i < p.len() => p.label(*i).to_owned(),
            (PointKind::Generic, _) => "η".to_owned(),
            (PointKind::Closed(k), _) => format!("c{k}"),
            (PointKind::Element(i), _) => format!("#{i}"),
        };
        prefix_path(&point.path, local)
    }

    pub fn describe_class(&self, class: &PointClass) -> String {
        match class.kind {
            ClassKind::ClosedPoints => prefix_path(&class.path, "c_k (closed points)".to_owned()),
            _ => self.describe_point(&class.representative()),
        }
    }

    /// Human-readable form of a subset: labels for finite leaves, `c_k` and
    /// `η` for antichain leaves, one bracketed entry per summand.
    pub fn describe_subset(&self, s: &SymbolicSubset) -> Result<String> {
        let e = self.normalized();
        describe_in(&e, s)
    }

    pub(crate) fn check_point(&self, point: &Point) -> Result<()> {
        let e = self.normalized();
        match (e.leaf_at(&point.path), &point.kind) {
            (Some(Leaf::Finite(p)), PointKind::Element(i)) if *i < p.len() => Ok(()),
            (Some(Leaf::Antichain { .. }), PointKind::Generic | PointKind::Closed(_)) => Ok(()),
            _ => Err(Error::NoSuchPoint),
        }
    }
}

fn describe_in(e: &SpaceExpr, s: &SymbolicSubset) -> Result<String> {
    match (e, s) {
        (SpaceExpr::Finite(p), SymbolicSubset::Finite(f)) if f.carrier_len() == p.len() => {
            let labels: Vec<&str> = f.iter().map(|i| p.label(i)).collect();
            Ok(format!("{{{}}}", labels.join(", ")))
        }
        (SpaceExpr::GenericOverAntichain | SpaceExpr::Dual(_), SymbolicSubset::Antichain(a)) => Ok(format!("{a:?}")),
        (SpaceExpr::Sum(parts), SymbolicSubset::Sum(subs)) if parts.len() == subs.len() => {
            let inner = parts
                .iter()
                .zip(subs)
                .map(|(p, q)| describe_in(p, q))
                .collect::<Result<Vec<_>>>()?;
            Ok(format!("[{}]", inner.join(", ")))
        }
        _ => Err(Error::CarrierMismatch),
    }
}

fn prefix_path(path: &[usize], local: String) -> String {
    if path.is_empty() {
        local
    } else {
        let p: Vec<String> = path.iter().map(|k| k.to_string()).collect();
        format!("{}:{local}", p.join(":"))
    }
}

impl fmt::Debug for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Finite(p) => write!(f, "Finite({p:?})"),
            SpaceExpr::GenericOverAntichain => write!(f, "GOA"),
            SpaceExpr::Dual(inner) => write!(f, "Dual({inner:?})"),
            SpaceExpr::Sum(parts) => {
                write!(f, "Sum[")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p:?}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// A single point, addressed by summand path plus a position in its leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub path: Vec<usize>,
    pub kind: PointKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointKind {
    Element(usize),
    Generic,
    Closed(u64),
}

/// A symmetry class of points. Every point-level predicate in this crate is
/// constant on a class, so quantifying over classes quantifies over points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointClass {
    pub path: Vec<usize>,
    pub kind: ClassKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Element(usize),
    Generic,
    /// All closed points `c0, c1, …` of an antichain leaf.
    ClosedPoints,
}

impl PointClass {
    /// `c0` stands for the closed points.
    pub fn representative(&self) -> Point {
        let kind = match self.kind {
            ClassKind::Element(i) => PointKind::Element(i),
            ClassKind::Generic => PointKind::Generic,
            ClassKind::ClosedPoints => PointKind::Closed(0),
        };
        Point {
            path: self.path.clone(),
            kind,
        }
    }

    pub fn contains(&self, point: &Point) -> bool {
        self.path == point.path
            && match (self.kind, point.kind) {
                (ClassKind::Element(i), PointKind::Element(j)) => i == j,
                (ClassKind::Generic, PointKind::Generic) => true,
                (ClassKind::ClosedPoints, PointKind::Closed(_)) => true,
                _ => false,
            }
    }
}

impl Point {
    pub fn singleton(&self, e: &SpaceExpr) -> Result<SymbolicSubset> {
        e.check_point(self)?;
        let e = e.normalized();
        let mut leaves = e
            .leaves()
            .into_iter()
            .map(|(path, leaf)| {
                if path != self.path {
                    return SymbolicSubset::leaf_empty(leaf);
                }
                match (leaf, self.kind) {
                    (Leaf::Finite(p), PointKind::Element(i)) => {
                        SymbolicSubset::Finite(crate::order::FiniteSubset::singleton(p.len(), i).expect("checked"))
                    }
                    (_, PointKind::Generic) => SymbolicSubset::Antichain(AntichainSubset::generic_only()),
                    (_, PointKind::Closed(k)) => {
                        SymbolicSubset::Antichain(AntichainSubset::finite([k], false))
                    }
                    _ => unreachable!("checked above"),
                }
            });
        Ok(SymbolicSubset::assemble(&e, &mut leaves))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_index_pairs(FinitePoset::default_labels(n), &pairs).unwrap()
    }

    #[test]
    fn double_dual_of_goa_cancels() {
        let e = SpaceExpr::dual_of(SpaceExpr::dual_of(SpaceExpr::goa()));
        assert_eq!(e.normalize(), SpaceExpr::goa());
    }

    #[test]
    fn dual_of_finite_is_opposite() {
        let c2 = chain(2);
        let e = SpaceExpr::dual_of(SpaceExpr::finite(c2.clone()));
        assert_eq!(e.normalize(), SpaceExpr::finite(c2.opposite()));
        assert_eq!(SpaceExpr::finite(chain(3)).dual(), SpaceExpr::finite(chain(3).opposite()));
    }

    #[test]
    fn dual_pushes_into_sum() {
        let c2 = chain(2);
        let e = SpaceExpr::dual_of(SpaceExpr::sum(vec![SpaceExpr::finite(c2.clone()), SpaceExpr::goa()]));
        assert_eq!(
            e.normalize(),
            SpaceExpr::sum(vec![
                SpaceExpr::finite(c2.opposite()),
                SpaceExpr::dual_of(SpaceExpr::goa())
            ])
        );
        assert_eq!(SpaceExpr::goa().dual(), SpaceExpr::dual_of(SpaceExpr::goa()));
    }

    #[test]
    fn normalize_is_idempotent_and_dual_involutive() {
        let exprs = [
            SpaceExpr::goa(),
            SpaceExpr::dual_of(SpaceExpr::sum(vec![
                SpaceExpr::dual_of(SpaceExpr::finite(chain(3))),
                SpaceExpr::sum(vec![SpaceExpr::goa(), SpaceExpr::dual_of(SpaceExpr::goa())]),
            ])),
            SpaceExpr::sum(vec![]),
        ];
        for e in &exprs {
            let n = e.normalize();
            assert!(n.is_normalized());
            assert_eq!(n.normalize(), n);
            assert_eq!(e.dual().dual(), n);
        }
    }

    #[test]
    fn point_class_counts() {
        assert_eq!(SpaceExpr::finite(chain(2)).point_classes().len(), 2);
        let goa = SpaceExpr::goa().point_classes();
        assert_eq!(goa.len(), 2);
        assert_eq!(goa[0].kind, ClassKind::Generic);
        let s = SpaceExpr::sum(vec![SpaceExpr::goa(), SpaceExpr::dual_of(SpaceExpr::goa())]);
        assert_eq!(s.point_classes().len(), 4);
    }

    #[test]
    fn singleton_of_point() {
        let e = SpaceExpr::sum(vec![SpaceExpr::finite(chain(2)), SpaceExpr::goa()]);
        let p = Point {
            path: vec![1],
            kind: PointKind::Closed(3),
        };
        let s = p.singleton(&e).unwrap();
        assert!(s.contains(&p));
        assert!(!s.contains(&Point {
            path: vec![1],
            kind: PointKind::Closed(2)
        }));
        let bad = Point {
            path: vec![0],
            kind: PointKind::Generic,
        };
        assert_eq!(bad.singleton(&e), Err(Error::NoSuchPoint));
        assert_eq!(e.describe_point(&p), "1:c3");
    }
}
