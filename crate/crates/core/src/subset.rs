//! Finitely described subsets of the spaces in [`crate::space`].

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::FiniteSubset;
use crate::space::{Leaf, Point, PointKind, SpaceExpr};

/// Whether the listed closed points are the ones present or the ones missing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosedMode {
    Finite,
    Cofinite,
}

/// A subset of an antichain leaf: a finite or cofinite set of closed points,
/// plus a flag for the generic point `η`.
///
/// The representation is canonical, so structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AntichainSubset {
    pub mode: ClosedMode,
    pub indices: BTreeSet<u64>,
    pub generic: bool,
}

impl AntichainSubset {
    pub fn new<I: IntoIterator<Item = u64>>(mode: ClosedMode, indices: I, generic: bool) -> Self {
        Self {
            mode,
            indices: indices.into_iter().collect(),
            generic,
        }
    }

    pub fn finite<I: IntoIterator<Item = u64>>(indices: I, generic: bool) -> Self {
        Self::new(ClosedMode::Finite, indices, generic)
    }

    /// All closed points except `indices`.
    pub fn cofinite<I: IntoIterator<Item = u64>>(indices: I, generic: bool) -> Self {
        Self::new(ClosedMode::Cofinite, indices, generic)
    }

    pub fn empty() -> Self {
        Self::finite([], false)
    }

    pub fn full() -> Self {
        Self::cofinite([], true)
    }

    pub fn generic_only() -> Self {
        Self::finite([], true)
    }

    pub fn all_closed_points() -> Self {
        Self::cofinite([], false)
    }

    pub fn is_empty(&self) -> bool {
        self.mode == ClosedMode::Finite && self.indices.is_empty() && !self.generic
    }

    pub fn is_full(&self) -> bool {
        self.mode == ClosedMode::Cofinite && self.indices.is_empty() && self.generic
    }

    /// Finitely many closed points (the generic flag is irrelevant).
    pub fn has_finite_closed_part(&self) -> bool {
        self.mode == ClosedMode::Finite
    }

    pub fn contains_closed(&self, k: u64) -> bool {
        match self.mode {
            ClosedMode::Finite => self.indices.contains(&k),
            ClosedMode::Cofinite => !self.indices.contains(&k),
        }
    }

    pub fn complement(&self) -> Self {
        let mode = match self.mode {
            ClosedMode::Finite => ClosedMode::Cofinite,
            ClosedMode::Cofinite => ClosedMode::Finite,
        };
        Self {
            mode,
            indices: self.indices.clone(),
            generic: !self.generic,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use ClosedMode::*;
        let (mode, indices) = match (self.mode, other.mode) {
            (Finite, Finite) => (Finite, &self.indices | &other.indices),
            (Finite, Cofinite) => (Cofinite, &other.indices - &self.indices),
            (Cofinite, Finite) => (Cofinite, &self.indices - &other.indices),
            (Cofinite, Cofinite) => (Cofinite, &self.indices & &other.indices),
        };
        Self {
            mode,
            indices,
            generic: self.generic || other.generic,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        use ClosedMode::*;
        let (mode, indices) = match (self.mode, other.mode) {
            (Finite, Finite) => (Finite, &self.indices & &other.indices),
            (Finite, Cofinite) => (Finite, &self.indices - &other.indices),
            (Cofinite, Finite) => (Finite, &other.indices - &self.indices),
            (Cofinite, Cofinite) => (Cofinite, &self.indices | &other.indices),
        };
        Self {
            mode,
            indices,
            generic: self.generic && other.generic,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn with_generic(mut self, generic: bool) -> Self {
        self.generic = generic;
        self
    }
}

impl fmt::Debug for AntichainSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.indices.iter().map(|k| format!("c{k}")).collect();
        let closed = match self.mode {
            ClosedMode::Finite => format!("{{{}}}", list.join(",")),
            ClosedMode::Cofinite if list.is_empty() => "all".to_owned(),
            ClosedMode::Cofinite => format!("all∖{{{}}}", list.join(",")),
        };
        write!(f, "{closed}{}", if self.generic { "+η" } else { "" })
    }
}

/// A subset of a [`SpaceExpr`], mirroring the structure of its normalized form.
/// Duals carry subsets of their underlying carrier, so they need no wrapper.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SymbolicSubset {
    Finite(FiniteSubset),
    Antichain(AntichainSubset),
    Sum(Vec<SymbolicSubset>),
}

impl fmt::Debug for SymbolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicSubset::Finite(s) => write!(f, "{s:?}"),
            SymbolicSubset::Antichain(s) => write!(f, "{s:?}"),
            SymbolicSubset::Sum(parts) => f.debug_list().entries(parts).finish(),
        }
    }
}

impl SymbolicSubset {
    pub fn leaf_empty(leaf: Leaf<'_>) -> Self {
        match leaf {
            Leaf::Finite(p) => SymbolicSubset::Finite(FiniteSubset::empty(p.len())),
            Leaf::Antichain { .. } => SymbolicSubset::Antichain(AntichainSubset::empty()),
        }
    }

    pub fn leaf_full(leaf: Leaf<'_>) -> Self {
        match leaf {
            Leaf::Finite(p) => SymbolicSubset::Finite(FiniteSubset::full(p.len())),
            Leaf::Antichain { .. } => SymbolicSubset::Antichain(AntichainSubset::full()),
        }
    }

    pub fn empty(e: &SpaceExpr) -> Self {
        Self::from_leaves(e, |_, leaf| Self::leaf_empty(leaf))
    }

    pub fn full(e: &SpaceExpr) -> Self {
        Self::from_leaves(e, |_, leaf| Self::leaf_full(leaf))
    }

    /// Builds a subset leaf by leaf.
    pub fn from_leaves(e: &SpaceExpr, mut f: impl FnMut(&[usize], Leaf<'_>) -> Self) -> Self {
        let e = e.normalized();
        let mut parts = e.leaves().into_iter().map(|(path, leaf)| f(&path, leaf));
        Self::assemble(&e, &mut parts)
    }

    /// Rebuilds the tree shape of `e` (normalized) from leaf subsets given in order.
    pub(crate) fn assemble(e: &SpaceExpr, leaves: &mut impl Iterator<Item = SymbolicSubset>) -> Self {
        match e {
            SpaceExpr::Sum(parts) => {
                SymbolicSubset::Sum(parts.iter().map(|p| Self::assemble(p, leaves)).collect())
            }
            _ => leaves.next().expect("one subset per leaf"),
        }
    }

    /// Pairs every leaf of the normalized `e` with the matching part of `self`.
    pub fn zip_leaves<'e, 's>(
        &'s self,
        e: &'e SpaceExpr,
    ) -> Result<Vec<(Vec<usize>, Leaf<'e>, &'s SymbolicSubset)>> {
        let mut out = Vec::new();
        zip_into(e, self, &mut Vec::new(), &mut out)?;
        Ok(out)
    }

    /// Checks that `self` is a subset of the carrier of `e`.
    pub fn check_carrier(&self, e: &SpaceExpr) -> Result<()> {
        let e = e.normalized();
        self.zip_leaves(&e).map(|_| ())
    }

    pub fn complement(&self) -> Self {
        match self {
            SymbolicSubset::Finite(s) => SymbolicSubset::Finite(s.complement()),
            SymbolicSubset::Antichain(s) => SymbolicSubset::Antichain(s.complement()),
            SymbolicSubset::Sum(parts) => {
                SymbolicSubset::Sum(parts.iter().map(SymbolicSubset::complement).collect())
            }
        }
    }

    fn combine(
        &self,
        other: &Self,
        fin: &impl Fn(&FiniteSubset, &FiniteSubset) -> FiniteSubset,
        anti: &impl Fn(&AntichainSubset, &AntichainSubset) -> AntichainSubset,
    ) -> Result<Self> {
        match (self, other) {
            (SymbolicSubset::Finite(a), SymbolicSubset::Finite(b))
                if a.carrier_len() == b.carrier_len() =>
            {
                Ok(SymbolicSubset::Finite(fin(a, b)))
            }
            (SymbolicSubset::Antichain(a), SymbolicSubset::Antichain(b)) => {
                Ok(SymbolicSubset::Antichain(anti(a, b)))
            }
            (SymbolicSubset::Sum(a), SymbolicSubset::Sum(b)) if a.len() == b.len() => a
                .iter()
                .zip(b)
                .map(|(x, y)| x.combine(y, fin, anti))
                .collect::<Result<Vec<_>>>()
                .map(SymbolicSubset::Sum),
            _ => Err(Error::CarrierMismatch),
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.combine(other, &|a, b| a.union(b), &|a, b| a.union(b))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.combine(other, &|a, b| a.intersection(b), &|a, b| a.intersection(b))
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.combine(other, &|a, b| a.difference(b), &|a, b| a.difference(b))
    }

    pub fn is_empty(&self) -> bool {
        match self {
            SymbolicSubset::Finite(s) => s.is_empty(),
            SymbolicSubset::Antichain(s) => s.is_empty(),
            SymbolicSubset::Sum(parts) => parts.iter().all(SymbolicSubset::is_empty),
        }
    }

    pub fn is_full(&self) -> bool {
        match self {
            SymbolicSubset::Finite(s) => s.is_full(),
            SymbolicSubset::Antichain(s) => s.is_full(),
            SymbolicSubset::Sum(parts) => parts.iter().all(SymbolicSubset::is_full),
        }
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    /// Membership of a point; points outside the carrier are never members.
    pub fn contains(&self, point: &Point) -> bool {
        let mut node = self;
        for &k in &point.path {
            match node {
                SymbolicSubset::Sum(parts) if k < parts.len() => node = &parts[k],
                _ => return false,
            }
        }
        match (node, point.kind) {
            (SymbolicSubset::Finite(s), PointKind::Element(i)) => s.contains(i),
            (SymbolicSubset::Antichain(s), PointKind::Generic) => s.generic,
            (SymbolicSubset::Antichain(s), PointKind::Closed(k)) => s.contains_closed(k),
            _ => false,
        }
    }
}

fn zip_into<'e, 's>(
    e: &'e SpaceExpr,
    s: &'s SymbolicSubset,
    path: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, Leaf<'e>, &'s SymbolicSubset)>,
) -> Result<()> {
    match (e, s) {
        (SpaceExpr::Finite(p), SymbolicSubset::Finite(f)) if f.carrier_len() == p.len() => {
            out.push((path.clone(), Leaf::Finite(p), s));
            Ok(())
        }
        (SpaceExpr::GenericOverAntichain, SymbolicSubset::Antichain(_)) => {
            out.push((path.clone(), Leaf::Antichain { inverse: false }, s));
            Ok(())
        }
        (SpaceExpr::Dual(inner), _) if matches!(**inner, SpaceExpr::GenericOverAntichain) => {
            match s {
                SymbolicSubset::Antichain(_) => {
                    out.push((path.clone(), Leaf::Antichain { inverse: true }, s));
                    Ok(())
                }
                _ => Err(Error::CarrierMismatch),
            }
        }
        (SpaceExpr::Sum(parts), SymbolicSubset::Sum(subs)) if parts.len() == subs.len() => {
            for (k, (p, q)) in parts.iter().zip(subs).enumerate() {
                path.push(k);
                zip_into(p, q, path, out)?;
                path.pop();
            }
            Ok(())
        }
        (SpaceExpr::Dual(_), _) => panic!("zip_leaves expects a normalized expression"),
        _ => Err(Error::CarrierMismatch),
    }
}
