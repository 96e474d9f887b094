//! Radical thick tensor ideals seen through their supports.
//!
//! Radical ideals of an essentially small tt-category are in bijection with
//! the Thomason subsets of its spectrum, and prime ideals with its points.
//! Objects are not modelled: an ideal is *finitely generated* exactly when
//! the complement of its support is constructible, and that criterion is
//! what [`RadicalIdeal::is_finitely_generated`] decides.

use crate::error::{Error, Result};
use crate::order::DEFAULT_DOWN_SET_CAP;
use crate::space::{ClassKind, Leaf, Point, PointClass, SpaceExpr};
use crate::subset::{AntichainSubset, SymbolicSubset};
use crate::topology::{self, SpaceProps};

/// A radical ideal, represented by its (Thomason) support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalIdeal {
    space: SpaceExpr,
    support: SymbolicSubset,
}

impl RadicalIdeal {
    /// The ideal supported on `support`. Fails with [`Error::NotThomason`]
    /// when no radical ideal has that support.
    pub fn from_thomason(e: &SpaceExpr, support: SymbolicSubset) -> Result<Self> {
        let space = e.normalize();
        if !topology::is_thomason(&space, &support)? {
            return Err(Error::NotThomason);
        }
        Ok(Self { space, support })
    }

    pub fn zero(e: &SpaceExpr) -> Self {
        let space = e.normalize();
        let support = SymbolicSubset::empty(&space);
        Self { space, support }
    }

    pub fn unit(e: &SpaceExpr) -> Self {
        let space = e.normalize();
        let support = SymbolicSubset::full(&space);
        Self { space, support }
    }

    pub fn space(&self) -> &SpaceExpr {
        &self.space
    }

    pub fn support(&self) -> &SymbolicSubset {
        &self.support
    }

    /// Finitely generated, equivalently principal: `supp(I)^c` is constructible.
    pub fn is_finitely_generated(&self) -> bool {
        topology::is_constructible(&self.space, &self.support.complement())
            .expect("support matches its own space")
    }

    /// The ideal generated by both, supported on the union.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::CarrierMismatch);
        }
        Self::from_thomason(&self.space, self.support.union(&other.support)?)
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::CarrierMismatch);
        }
        Self::from_thomason(&self.space, self.support.intersection(&other.support)?)
    }
}

/// The prime ideal corresponding to a point `P`; its support is `gen(P)^c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdeal {
    space: SpaceExpr,
    point: Point,
}

impl PrimeIdeal {
    pub fn at_point(e: &SpaceExpr, point: Point) -> Result<Self> {
        let space = e.normalize();
        point.singleton(&space)?;
        Ok(Self { space, point })
    }

    pub fn at_class(e: &SpaceExpr, class: &PointClass) -> Result<Self> {
        Self::at_point(e, class.representative())
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    pub fn space(&self) -> &SpaceExpr {
        &self.space
    }

    pub fn support(&self) -> SymbolicSubset {
        topology::generalizations_of_point(&self.space, &self.point)
            .expect("point checked at construction")
            .complement()
    }

    pub fn as_radical(&self) -> RadicalIdeal {
        RadicalIdeal::from_thomason(&self.space, self.support())
            .expect("complement of a generalization closure is Thomason")
    }

    pub fn is_finitely_generated(&self) -> bool {
        self.as_radical().is_finitely_generated()
    }
}

/// Closed-point part of an arbitrary subset of an antichain leaf, up to the
/// symmetry permuting closed points. `InfiniteCoinfinite` covers the sets no
/// descriptor can name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedShape {
    Empty,
    AllClosed,
    FiniteNonempty,
    CofiniteProper,
    InfiniteCoinfinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetShape {
    pub closed: ClosedShape,
    pub generic: bool,
}

impl SubsetShape {
    pub fn all() -> Vec<SubsetShape> {
        use ClosedShape::*;
        let mut out = Vec::new();
        for closed in [Empty, AllClosed, FiniteNonempty, CofiniteProper, InfiniteCoinfinite] {
            for generic in [false, true] {
                out.push(SubsetShape { closed, generic });
            }
        }
        out
    }

    /// A descriptor of this shape, if one exists.
    pub fn representative(&self) -> Option<AntichainSubset> {
        let closed = match self.closed {
            ClosedShape::Empty => AntichainSubset::finite([], false),
            ClosedShape::AllClosed => AntichainSubset::cofinite([], false),
            ClosedShape::FiniteNonempty => AntichainSubset::finite([0], false),
            ClosedShape::CofiniteProper => AntichainSubset::cofinite([0], false),
            ClosedShape::InfiniteCoinfinite => return None,
        };
        Some(closed.with_generic(self.generic))
    }

    pub fn complement(&self) -> SubsetShape {
        use ClosedShape::*;
        let closed = match self.closed {
            Empty => AllClosed,
            AllClosed => Empty,
            FiniteNonempty => CofiniteProper,
            CofiniteProper => FiniteNonempty,
            InfiniteCoinfinite => InfiniteCoinfinite,
        };
        SubsetShape {
            closed,
            generic: !self.generic,
        }
    }

    /// Thomason in the antichain leaf (or its dual when `inverse`).
    ///
    /// An infinite, coinfinite set of closed points is a union of finite
    /// ones, hence Thomason in the antichain leaf; in the dual every
    /// nonempty Thomason set is cofinite.
    pub fn is_thomason(&self, inverse: bool) -> bool {
        match self.representative() {
            Some(rep) => antichain_leaf_holds(inverse, rep, topology::is_thomason),
            None => !inverse && !self.generic,
        }
    }

    /// Constructible sets are finite or cofinite, so infinite-coinfinite ones never are.
    pub fn is_constructible(&self, inverse: bool) -> bool {
        match self.representative() {
            Some(rep) => antichain_leaf_holds(inverse, rep, topology::is_constructible),
            None => false,
        }
    }
}

fn antichain_leaf_holds(
    inverse: bool,
    s: AntichainSubset,
    pred: fn(&SpaceExpr, &SymbolicSubset) -> Result<bool>,
) -> bool {
    let e = if inverse {
        SpaceExpr::dual_of(SpaceExpr::goa())
    } else {
        SpaceExpr::goa()
    };
    pred(&e, &SymbolicSubset::Antichain(s)).expect("antichain carrier")
}

/// Result of deciding "every radical ideal is finitely generated".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalFgVerdict {
    pub holds: bool,
    /// A describable radical ideal that is not finitely generated.
    pub witness: Option<RadicalIdeal>,
    /// Shapes of supports, per offending leaf, that fail finite generation.
    pub failing_shapes: Vec<(Vec<usize>, SubsetShape)>,
}

/// Quantifies over all radical ideals, leaf by leaf.
///
/// Finite leaves enumerate their down-sets (every subset of a finite space
/// is constructible, which covers leaves above the enumeration cap).
/// Antichain leaves quantify over [`SubsetShape`]s, including supports no
/// descriptor can name.
pub fn every_radical_ideal_fg(e: &SpaceExpr) -> Result<RadicalFgVerdict> {
    let e = e.normalize();
    let mut failing_shapes = Vec::new();
    let mut witness = None;
    for (path, leaf) in e.leaves() {
        match leaf {
            Leaf::Finite(p) => {
                if p.len() <= DEFAULT_DOWN_SET_CAP {
                    for d in p.down_sets(DEFAULT_DOWN_SET_CAP)? {
                        let support = lift(&e, &path, SymbolicSubset::Finite(d));
                        let ideal = RadicalIdeal::from_thomason(&e, support)?;
                        if !ideal.is_finitely_generated() {
                            return Err(Error::InternalInconsistency(format!(
                                "ideal {ideal:?} of a finite space is not finitely generated"
                            )));
                        }
                    }
                }
            }
            Leaf::Antichain { inverse } => {
                for shape in SubsetShape::all() {
                    if shape.is_thomason(inverse) && !shape.complement().is_constructible(inverse) {
                        failing_shapes.push((path.clone(), shape));
                        if let (None, Some(rep)) = (&witness, shape.representative()) {
                            let support = lift(&e, &path, SymbolicSubset::Antichain(rep));
                            witness = Some(RadicalIdeal::from_thomason(&e, support)?);
                        }
                    }
                }
            }
        }
    }
    Ok(RadicalFgVerdict {
        holds: failing_shapes.is_empty(),
        witness,
        failing_shapes,
    })
}

/// `part` at the leaf `path`, empty elsewhere.
fn lift(e: &SpaceExpr, path: &[usize], part: SymbolicSubset) -> SymbolicSubset {
    let mut part = Some(part);
    SymbolicSubset::from_leaves(e, |p, leaf| {
        if p == path {
            part.take().expect("single leaf per path")
        } else {
            SymbolicSubset::leaf_empty(leaf)
        }
    })
}

/// A point class whose prime is not finitely generated. Closed-point classes
/// are tried first, then the remaining classes in order.
pub fn find_non_fg_prime(e: &SpaceExpr) -> Result<Option<PointClass>> {
    let e = e.normalize();
    let (closed, rest): (Vec<PointClass>, Vec<PointClass>) = e
        .point_classes()
        .into_iter()
        .partition(|c| c.kind == ClassKind::ClosedPoints);
    for class in closed.into_iter().chain(rest) {
        if !PrimeIdeal::at_class(&e, &class)?.is_finitely_generated() {
            return Ok(Some(class));
        }
    }
    Ok(None)
}

/// An injective family `k ↦ I_k` of radical ideals, witnessing infinitely many.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    pub space: SpaceExpr,
    pub path: Vec<usize>,
    pub inverse: bool,
}

impl IdealFamily {
    /// `{c0, …, ck}` on the antichain leaf; everything but those on its dual.
    pub fn support(&self, k: u64) -> SymbolicSubset {
        let part = if self.inverse {
            AntichainSubset::cofinite(0..=k, true)
        } else {
            AntichainSubset::finite(0..=k, false)
        };
        lift(&self.space, &self.path, SymbolicSubset::Antichain(part))
    }

    pub fn ideal(&self, k: u64) -> RadicalIdeal {
        RadicalIdeal::from_thomason(&self.space, self.support(k))
            .expect("family members are Thomason")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalIdealCount {
    Finite(u128),
    Infinite(IdealFamily),
}

impl RadicalIdealCount {
    pub fn is_finite(&self) -> bool {
        matches!(self, RadicalIdealCount::Finite(_))
    }
}

/// Counts radical ideals, i.e. Thomason subsets. For finite spaces this is
/// the number of down-sets, multiplied over summands.
pub fn count_radical_ideals(e: &SpaceExpr) -> Result<RadicalIdealCount> {
    let e = e.normalize();
    let mut total: u128 = 1;
    for (path, leaf) in e.leaves() {
        match leaf {
            Leaf::Finite(p) => {
                total = total.checked_mul(p.count_down_sets()).ok_or(Error::CapExceeded {
                    what: "radical ideal count (bits)",
                    size: 129,
                    cap: 128,
                })?;
            }
            Leaf::Antichain { inverse } => {
                return Ok(RadicalIdealCount::Infinite(IdealFamily {
                    space: e.clone(),
                    path,
                    inverse,
                }))
            }
        }
    }
    Ok(RadicalIdealCount::Finite(total))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohenReport {
    pub every_radical_fg: bool,
    pub every_prime_fg: bool,
    pub inverse_noetherian: bool,
    pub weakly_noetherian: bool,
    pub finite: bool,
    pub non_fg_radical: Option<RadicalIdeal>,
    pub non_fg_prime: Option<PrimeIdeal>,
    pub radical_ideals: RadicalIdealCount,
    pub props: SpaceProps,
}

/// Evaluates every flag independently, then checks that they fit the
/// Cohen-type equivalences. A mismatch is reported as
/// [`Error::InternalInconsistency`].
pub fn cohen_report(e: &SpaceExpr) -> Result<CohenReport> {
    let e = e.normalize();
    let props = topology::space_props(&e)?;
    let radical = every_radical_ideal_fg(&e)?;
    let non_fg_prime = find_non_fg_prime(&e)?
        .map(|class| PrimeIdeal::at_class(&e, &class))
        .transpose()?;
    let radical_ideals = count_radical_ideals(&e)?;

    let report = CohenReport {
        every_radical_fg: radical.holds,
        every_prime_fg: non_fg_prime.is_none(),
        inverse_noetherian: props.is_inverse_noetherian,
        weakly_noetherian: props.is_weakly_noetherian,
        finite: props.is_finite,
        non_fg_radical: radical.witness,
        non_fg_prime,
        radical_ideals,
        props,
    };

    let mismatch = |what: &str| {
        Err(Error::InternalInconsistency(format!(
            "{e:?}: {what} (radical fg {}, prime fg {}, inverse-Noetherian {}, weakly Noetherian {}, finite {})",
            report.every_radical_fg,
            report.every_prime_fg,
            report.inverse_noetherian,
            report.weakly_noetherian,
            report.finite
        )))
    };
    if report.every_radical_fg != report.every_prime_fg
        || report.every_prime_fg != report.inverse_noetherian
    {
        return mismatch("finite generation of radicals, of primes and inverse-Noetherianity disagree");
    }
    let wn = report.weakly_noetherian;
    if (wn && report.every_radical_fg) != report.finite || (wn && report.every_prime_fg) != report.finite {
        return mismatch("weakly Noetherian plus finite generation does not match finiteness");
    }
    if report.radical_ideals.is_finite() != report.finite {
        return mismatch("finitely many radical ideals does not match finiteness");
    }
    if !report.every_radical_fg && report.non_fg_radical.is_none() {
        return mismatch("no describable non-finitely-generated radical ideal");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{FinitePoset, FiniteSubset};
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

    fn class(kind: ClassKind) -> PointClass {
        PointClass { path: vec![], kind }
    }

    fn chain(n: usize) -> FinitePoset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_index_pairs(FinitePoset::default_labels(n), &pairs).unwrap()
    }

    #[test]
    fn zero_and_unit_are_fg() {
        for e in [goa(), inv(), SpaceExpr::finite(chain(3))] {
            assert!(RadicalIdeal::zero(&e).is_finitely_generated());
            assert!(RadicalIdeal::unit(&e).is_finitely_generated());
            assert_eq!(
                RadicalIdeal::from_thomason(&e, SymbolicSubset::empty(&e)).unwrap(),
                RadicalIdeal::zero(&e)
            );
        }
    }

    #[test]
    fn ideal_on_one_closed_point() {
        let i = RadicalIdeal::from_thomason(&goa(), a(AntichainSubset::finite([0], false))).unwrap();
        assert!(i.is_finitely_generated());
        assert_eq!(
            RadicalIdeal::from_thomason(&goa(), a(AntichainSubset::generic_only())),
            Err(Error::NotThomason)
        );
    }

    #[test]
    fn primes_of_goa() {
        let p = PrimeIdeal::at_class(&goa(), &class(ClassKind::Generic)).unwrap();
        assert_eq!(p.support(), a(AntichainSubset::all_closed_points()));
        assert!(!p.is_finitely_generated());
        let q = PrimeIdeal::at_class(&goa(), &class(ClassKind::ClosedPoints)).unwrap();
        assert_eq!(q.support(), a(AntichainSubset::cofinite([0], false)));
        assert!(!q.is_finitely_generated());
    }

    #[test]
    fn primes_of_inverse_goa() {
        let q = PrimeIdeal::at_class(&inv(), &class(ClassKind::ClosedPoints)).unwrap();
        assert_eq!(q.support(), a(AntichainSubset::cofinite([0], true)));
        assert!(q.is_finitely_generated());
        let p = PrimeIdeal::at_class(&inv(), &class(ClassKind::Generic)).unwrap();
        assert!(p.support().is_empty());
        assert!(p.is_finitely_generated());
    }

    #[test]
    fn every_thomason_support_of_inverse_goa_is_fg() {
        for shape in SubsetShape::all() {
            if shape.is_thomason(true) {
                let rep = shape.representative().unwrap();
                let i = RadicalIdeal::from_thomason(&inv(), a(rep)).unwrap();
                assert!(i.is_finitely_generated(), "{shape:?}");
            }
        }
        assert!(every_radical_ideal_fg(&inv()).unwrap().holds);
    }

    #[test]
    fn goa_has_non_fg_radical_ideals() {
        let v = every_radical_ideal_fg(&goa()).unwrap();
        assert!(!v.holds);
        assert!(!v.witness.unwrap().is_finitely_generated());
        assert!(v.failing_shapes.iter().any(|(_, s)| s.closed == ClosedShape::InfiniteCoinfinite));
    }

    #[test]
    fn shape_rules_agree_with_descriptors() {
        for inverse in [false, true] {
            for shape in SubsetShape::all() {
                if let Some(rep) = shape.representative() {
                    assert_eq!(Some(rep.complement()), shape.complement().representative());
                } else {
                    assert!(!shape.is_constructible(inverse));
                }
                assert_eq!(shape.complement().complement(), shape);
            }
        }
    }

    /// The even closed points agree with no constructible descriptor on any
    /// long enough truncation.
    #[test]
    fn infinite_coinfinite_sets_are_not_constructible_on_truncations() {
        let n = 4u64;
        let evens = |k: u64| k.is_multiple_of(2);
        for bits in 0u64..1 << n {
            let idx: Vec<u64> = (0..n).filter(|i| bits >> i & 1 == 1).collect();
            for d in [
                AntichainSubset::finite(idx.iter().copied(), false),
                AntichainSubset::cofinite(idx.iter().copied(), true),
            ] {
                assert!(topology::is_constructible(&goa(), &a(d.clone())).unwrap());
                let agrees = (0..2 * n + 2).all(|k| d.contains_closed(k) == evens(k));
                assert!(!agrees);
            }
        }
    }

    #[test]
    fn counts() {
        let anti2 = FinitePoset::from_index_pairs(FinitePoset::default_labels(2), &[]).unwrap();
        assert_eq!(
            count_radical_ideals(&SpaceExpr::finite(anti2)).unwrap(),
            RadicalIdealCount::Finite(4)
        );
        assert_eq!(
            count_radical_ideals(&SpaceExpr::finite(chain(3))).unwrap(),
            RadicalIdealCount::Finite(4)
        );
        match count_radical_ideals(&goa()).unwrap() {
            RadicalIdealCount::Infinite(fam) => {
                let members: Vec<_> = (0..5).map(|k| fam.ideal(k)).collect();
                for i in 0..5 {
                    for j in 0..i {
                        assert_ne!(members[i], members[j]);
                    }
                }
            }
            other => panic!("{other:?}"),
        }
        match count_radical_ideals(&inv()).unwrap() {
            RadicalIdealCount::Infinite(fam) => {
                assert!(fam.inverse);
                assert_ne!(fam.ideal(0), fam.ideal(1));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            count_radical_ideals(&SpaceExpr::sum(vec![])).unwrap(),
            RadicalIdealCount::Finite(1)
        );
    }

    #[test]
    fn cohen_report_goa() {
        let r = cohen_report(&goa()).unwrap();
        assert!(!r.every_radical_fg && !r.every_prime_fg && !r.inverse_noetherian);
        assert!(r.weakly_noetherian && !r.finite);
        let p = r.non_fg_prime.unwrap();
        assert!(!p.is_finitely_generated());
    }

    #[test]
    fn cohen_report_inverse_goa() {
        let r = cohen_report(&inv()).unwrap();
        assert!(r.every_radical_fg && r.every_prime_fg && r.inverse_noetherian);
        assert!(!r.weakly_noetherian && !r.finite);
        assert!(r.non_fg_prime.is_none());
    }

    #[test]
    fn cohen_report_finite() {
        let r = cohen_report(&SpaceExpr::finite(chain(3))).unwrap();
        assert!(r.every_radical_fg && r.every_prime_fg && r.inverse_noetherian);
        assert!(r.weakly_noetherian && r.finite);
        assert_eq!(r.radical_ideals, RadicalIdealCount::Finite(4));
    }

    #[test]
    fn non_fg_prime_search() {
        assert!(find_non_fg_prime(&goa()).unwrap().is_some());
        assert!(find_non_fg_prime(&inv()).unwrap().is_none());
        assert!(find_non_fg_prime(&SpaceExpr::finite(chain(2))).unwrap().is_none());
        let s = SpaceExpr::sum(vec![inv(), goa()]);
        let c = find_non_fg_prime(&s).unwrap().unwrap();
        assert_eq!(c.path, vec![1]);
    }

    #[test]
    fn classification_on_finite_leaf() {
        let p = chain(3);
        let e = SpaceExpr::finite(p.clone());
        for s in FiniteSubset::all(3) {
            let r = RadicalIdeal::from_thomason(&e, SymbolicSubset::Finite(s));
            assert_eq!(r.is_ok(), p.is_down_set(&s));
            if let Ok(i) = r {
                assert_eq!(i.support(), &SymbolicSubset::Finite(s));
            }
        }
        let prime = PrimeIdeal::at_point(
            &e,
            Point {
                path: vec![],
                kind: PointKind::Element(1),
            },
        )
        .unwrap();
        // gen(1) = {1, 2}
        assert_eq!(prime.support(), SymbolicSubset::Finite(FiniteSubset::singleton(3, 0).unwrap()));
    }
}
