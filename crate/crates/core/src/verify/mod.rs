//! Exhaustive and randomized checks of the library against brute-force oracles.
//!
//! Each [`Statement`] is checked instance by instance. On finite posets the
//! library is compared with [`oracle::Oracle`], which works from the order
//! relation alone. On the catalog and on user-supplied spaces the checker
//! samples subsets per leaf and tests the statement's equivalences directly,
//! falling back to the oracle whenever a space is a small finite sum.

pub mod oracle;
pub mod posets;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::catalog::{self, Expected};
use crate::error::{Error, Result};
use crate::order::{FinitePoset, FiniteSubset, DEFAULT_DOWN_SET_CAP};
use crate::space::{Leaf, SpaceExpr};
use crate::subset::{AntichainSubset, ClosedMode, SymbolicSubset};
use crate::topology;
use crate::tt::{self, PrimeIdeal, RadicalIdeal, RadicalIdealCount};
use oracle::{Oracle, MAX_ORACLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    WvInverse,
    Finiteness,
    FgLemmaConsistency,
    Proposition,
    Theorem,
    Remark,
    DualityInvolution,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::WvInverse,
        Statement::Finiteness,
        Statement::FgLemmaConsistency,
        Statement::Proposition,
        Statement::Theorem,
        Statement::Remark,
        Statement::DualityInvolution,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::WvInverse => "wv-inverse",
            Statement::Finiteness => "finiteness",
            Statement::FgLemmaConsistency => "fg-lemma-consistency",
            Statement::Proposition => "proposition",
            Statement::Theorem => "theorem",
            Statement::Remark => "remark",
            Statement::DualityInvolution => "duality-involution",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL.into_iter().find(|st| st.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Statement::ALL.iter().map(|st| st.id()).collect();
            Error::Parse(format!("unknown statement `{s}`, expected one of {}", ids.join(", ")))
        })
    }
}

/// Where a statement is checked.
#[derive(Clone, Debug)]
pub enum Scope {
    /// All labeled posets with at most this many elements.
    Posets(usize),
    /// The builtin catalog, including its frozen expectations.
    Catalog,
    Both(usize),
    /// Named spaces, each with optional expectations.
    Spaces(Vec<(String, SpaceExpr, Option<Expected>)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub statement: String,
    pub instances: u64,
    /// In generation order, so the first entry is the first failing instance.
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check<T: PartialEq + fmt::Debug>(&mut self, instance: &dyn Fn() -> String, what: &str, expected: T, actual: T) {
        if expected != actual {
            self.failures.push(Failure {
                instance: instance(),
                expected: format!("{what}: {expected:?}"),
                actual: format!("{what}: {actual:?}"),
            });
        }
    }

    fn error(&mut self, instance: &dyn Fn() -> String, err: Error) {
        self.failures.push(Failure {
            instance: instance(),
            expected: "no error".into(),
            actual: err.to_string(),
        });
    }

    fn absorb(&mut self, other: Tally) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }
}

/// Checks one statement over a scope. Failures are data; errors only signal
/// an invalid scope.
pub fn check_statement(statement: Statement, scope: &Scope) -> Result<CheckResult> {
    let start = Instant::now();
    let mut tally = Tally::default();
    match scope {
        Scope::Posets(n) => check_posets(statement, *n, &mut tally)?,
        Scope::Catalog => check_catalog(statement, &mut tally),
        Scope::Both(n) => {
            check_posets(statement, *n, &mut tally)?;
            check_catalog(statement, &mut tally);
        }
        Scope::Spaces(spaces) => {
            for (name, e, expected) in spaces {
                check_space(statement, name, e, expected.as_ref(), &mut tally);
            }
        }
    }
    Ok(CheckResult {
        statement: statement.id().to_string(),
        instances: tally.instances,
        failures: tally.failures,
        elapsed: start.elapsed(),
    })
}

/// All labeled posets with at most `n` elements, in generation order.
pub fn posets_up_to(n: usize) -> Result<Vec<FinitePoset>> {
    let mut all = Vec::new();
    for k in 0..=n {
        all.extend(posets::exhaustive_posets(k)?);
    }
    Ok(all)
}

fn check_posets(statement: Statement, n: usize, tally: &mut Tally) -> Result<()> {
    let all = posets_up_to(n)?;
    let parts: Vec<Tally> = all
        .par_iter()
        .map(|p| {
            let mut t = Tally::default();
            check_poset(statement, p, &mut t);
            t
        })
        .collect();
    for t in parts {
        tally.absorb(t);
    }
    Ok(())
}

fn check_catalog(statement: Statement, tally: &mut Tally) {
    for entry in catalog::catalog() {
        check_space(statement, entry.name, &entry.expr, Some(&entry.expected), tally);
    }
}

fn finite_subset(p: &FinitePoset, bits: u32) -> SymbolicSubset {
    SymbolicSubset::Finite(FiniteSubset::from_bits(bits as u64, p.len()).expect("bits within carrier"))
}

fn bits_of(s: &SymbolicSubset) -> u32 {
    match s {
        SymbolicSubset::Finite(f) => f.bits() as u32,
        _ => panic!("expected a finite leaf subset"),
    }
}

fn check_poset(statement: Statement, p: &FinitePoset, t: &mut Tally) {
    let e = SpaceExpr::finite(p.clone());
    let o = Oracle::new(p);
    let name = || format!("{p:?}");
    if let Err(err) = poset_statement(statement, p, &e, &o, t) {
        t.error(&name, err);
    }
}

fn poset_statement(statement: Statement, p: &FinitePoset, e: &SpaceExpr, o: &Oracle, t: &mut Tally) -> Result<()> {
    let full = o.full();
    let at = |bits: u32| move || format!("{p:?}, subset {:?}", FiniteSubset::from_bits(bits as u64, p.len()).unwrap());
    match statement {
        Statement::WvInverse => {
            for bits in 0..=full {
                t.instances += 1;
                let s = finite_subset(p, bits);
                let here = at(bits);
                let expected = o.is_weakly_visible(bits);
                t.check(&here, "oracle: locally closed in the inverse topology", expected, o.is_locally_closed_in_inverse(bits));
                let pair = topology::weakly_visible_pair(e, &s)?;
                t.check(&here, "Thomason pair search", expected, pair.is_some());
                if let Some((w1, w2)) = pair {
                    let (b1, b2) = (bits_of(&w1), bits_of(&w2));
                    t.check(&here, "pair is Thomason and cuts out the subset", true,
                        o.is_thomason(b1) && o.is_thomason(b2) && b1 & !b2 & full == bits);
                }
                t.check(&here, "locally closed in the dual", expected, topology::is_weakly_visible_via_inverse(e, &s)?);
            }
        }
        Statement::Finiteness => {
            t.instances += 1;
            let here = || format!("{p:?}");
            let props = topology::space_props(e)?;
            t.check(&here, "finite", true, props.is_finite);
            t.check(&here, "weakly Noetherian", o.weakly_noetherian(), props.is_weakly_noetherian);
            t.check(&here, "inverse-Noetherian", true, props.is_inverse_noetherian);
            t.check(&here, "finite = weakly Noetherian and inverse-Noetherian", props.is_finite,
                props.is_weakly_noetherian && props.is_inverse_noetherian);
            for x in 0..p.len() {
                let single = finite_subset(p, 1 << x);
                t.check(&here, "singleton constructible (oracle)", true, o.is_constructible(1 << x));
                t.check(&here, "singleton constructible", true, topology::is_constructible(e, &single)?);
            }
        }
        Statement::FgLemmaConsistency => {
            let mut fg_supports = Vec::new();
            for bits in 0..=full {
                t.instances += 1;
                let here = at(bits);
                let s = finite_subset(p, bits);
                let qc = topology::is_quasi_compact_open(e, &s)?;
                let cons = topology::is_constructible(e, &s)?;
                let gen_closed = topology::generalization_closure(e, &s)? == s;
                t.check(&here, "quasi-compact open", o.is_open(bits), qc);
                t.check(&here, "constructible", o.is_constructible(bits), cons);
                t.check(&here, "quasi-compact open = constructible and generalization-closed", qc, cons && gen_closed);
                t.check(&here, "Thomason", o.is_thomason(bits), topology::is_thomason(e, &s)?);
                match RadicalIdeal::from_thomason(e, s) {
                    Ok(ideal) => {
                        let fg = ideal.is_finitely_generated();
                        t.check(&here, "finitely generated", o.is_constructible(full & !bits), fg);
                        if fg {
                            fg_supports.push(ideal);
                        }
                    }
                    Err(Error::NotThomason) => t.check(&here, "Thomason", false, o.is_thomason(bits)),
                    Err(err) => return Err(err),
                }
            }
            for (i, a) in fg_supports.iter().enumerate() {
                for b in &fg_supports[i..] {
                    t.instances += 1;
                    let j = a.join(b)?;
                    let here = || format!("{p:?}, join of {:?} and {:?}", a.support(), b.support());
                    t.check(&here, "join of finitely generated ideals is finitely generated", true, j.is_finitely_generated());
                    t.check(&here, "join support", bits_of(a.support()) | bits_of(b.support()), bits_of(j.support()));
                }
            }
        }
        Statement::Proposition => {
            t.instances += 1;
            let here = || format!("{p:?}");
            let r = tt::cohen_report(e)?;
            t.check(&here, "every radical ideal finitely generated", o.every_radical_fg(), r.every_radical_fg);
            t.check(&here, "every prime finitely generated", o.every_prime_fg(), r.every_prime_fg);
            t.check(&here, "inverse-Noetherian", true, r.inverse_noetherian);
            t.check(&here, "radical fg = prime fg = inverse-Noetherian",
                (r.every_radical_fg, r.every_radical_fg), (r.every_prime_fg, r.inverse_noetherian));
        }
        Statement::Theorem => {
            t.instances += 1;
            let here = || format!("{p:?}");
            let r = tt::cohen_report(e)?;
            let wn = o.weakly_noetherian();
            t.check(&here, "weakly Noetherian", wn, r.weakly_noetherian);
            t.check(&here, "weakly Noetherian and radical fg", true, wn && r.every_radical_fg);
            t.check(&here, "weakly Noetherian and prime fg", true, wn && r.every_prime_fg);
            t.check(&here, "finite", true, r.finite);
        }
        Statement::Remark => {
            t.instances += 1;
            let here = || format!("{p:?}");
            let brute = o.thomason_sets().len() as u128;
            t.check(&here, "closed sets (oracle)", brute, o.count_closed_sets() as u128);
            match tt::count_radical_ideals(e)? {
                RadicalIdealCount::Finite(k) => t.check(&here, "radical ideals", brute, k),
                RadicalIdealCount::Infinite(_) => t.check(&here, "finitely many radical ideals", true, false),
            }
            t.check(&here, "enumerated down-sets", brute, p.down_sets(DEFAULT_DOWN_SET_CAP)?.count() as u128);
        }
        Statement::DualityInvolution => {
            t.instances += 1;
            let here = || format!("{p:?}");
            t.check(&here, "opposite of opposite", p.clone(), p.opposite().opposite());
            let dual = e.dual();
            t.check(&here, "dual of dual", e.normalize(), dual.dual());
            let od = Oracle::new(&p.opposite());
            for bits in 0..=full {
                t.instances += 1;
                let here = at(bits);
                let s = finite_subset(p, bits);
                t.check(&here, "oracle: Thomason = open in the opposite", o.is_thomason(bits), od.is_open(bits));
                t.check(&here, "oracle: constructible in the opposite", o.is_constructible(bits), od.is_constructible(bits));
                t.check(&here, "Thomason = open in the dual", topology::is_thomason(e, &s)?, topology::is_open(&dual, &s)?);
                t.check(&here, "constructible in the dual", topology::is_constructible(e, &s)?, topology::is_constructible(&dual, &s)?);
            }
        }
    }
    Ok(())
}

/// The disjoint union of the leaves of a finite normalized space, when small
/// enough for the oracle.
struct Amalgam {
    poset: FinitePoset,
    oracle: Oracle,
    offsets: Vec<usize>,
}

impl Amalgam {
    fn new(e: &SpaceExpr) -> Option<Self> {
        let mut parts = Vec::new();
        let mut offsets = Vec::new();
        let mut total = 0;
        for (_, leaf) in e.leaves() {
            match leaf {
                Leaf::Finite(p) => {
                    offsets.push(total);
                    total += p.len();
                    parts.push(p.clone());
                }
                Leaf::Antichain { .. } => return None,
            }
        }
        if total > MAX_ORACLE {
            return None;
        }
        let poset = FinitePoset::disjoint_union(&parts).ok()?;
        let oracle = Oracle::new(&poset);
        Some(Self { poset, oracle, offsets })
    }

    fn bits(&self, e: &SpaceExpr, s: &SymbolicSubset) -> u32 {
        s.zip_leaves(e)
            .expect("sampled subsets match the carrier")
            .iter()
            .zip(&self.offsets)
            .fold(0, |acc, ((_, _, part), &off)| acc | bits_of(part) << off)
    }

    fn subset(&self, e: &SpaceExpr, bits: u32) -> SymbolicSubset {
        let mut k = 0;
        SymbolicSubset::from_leaves(e, |_, leaf| {
            let Leaf::Finite(p) = leaf else { unreachable!("amalgams have finite leaves") };
            let part = finite_subset(p, bits >> self.offsets[k] & ((1u32 << p.len()) - 1));
            k += 1;
            part
        })
    }
}

/// Descriptor shapes for an antichain leaf: indices drawn from `{c0, c1, c2}`.
fn antichain_samples() -> Vec<AntichainSubset> {
    let mut out = Vec::new();
    for mask in 0u64..8 {
        let indices: Vec<u64> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
        for mode in [ClosedMode::Finite, ClosedMode::Cofinite] {
            for generic in [false, true] {
                out.push(AntichainSubset::new(mode, indices.iter().copied(), generic));
            }
        }
    }
    out
}

fn leaf_samples(leaf: Leaf<'_>) -> Vec<SymbolicSubset> {
    match leaf {
        Leaf::Finite(p) if p.len() <= MAX_ORACLE => FiniteSubset::all(p.len()).map(SymbolicSubset::Finite).collect(),
        Leaf::Finite(p) => {
            let mut out = vec![SymbolicSubset::leaf_empty(leaf), SymbolicSubset::leaf_full(leaf)];
            for i in 0..p.len() {
                let single = FiniteSubset::singleton(p.len(), i).expect("index in range");
                out.push(SymbolicSubset::Finite(p.down_closure(&single)));
                out.push(SymbolicSubset::Finite(p.up_closure(&single)));
                out.push(SymbolicSubset::Finite(single));
            }
            out
        }
        Leaf::Antichain { .. } => antichain_samples().into_iter().map(SymbolicSubset::Antichain).collect(),
    }
}

/// Subsets of a normalized space to test statements on. Small finite spaces
/// get every subset; otherwise each leaf varies over its samples while the
/// other leaves are all empty or all full.
fn sample_subsets(e: &SpaceExpr, amalgam: Option<&Amalgam>) -> Vec<SymbolicSubset> {
    if let Some(a) = amalgam {
        return (0..=a.oracle.full()).map(|bits| a.subset(e, bits)).collect();
    }
    let leaves = e.leaves();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (target, leaf) in &leaves {
        for cand in leaf_samples(*leaf) {
            for background_full in [false, true] {
                let mut cand = Some(cand.clone());
                let s = SymbolicSubset::from_leaves(e, |path, leaf| {
                    if path == target.as_slice() {
                        cand.take().expect("one leaf per path")
                    } else if background_full {
                        SymbolicSubset::leaf_full(leaf)
                    } else {
                        SymbolicSubset::leaf_empty(leaf)
                    }
                });
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
    }
    if out.is_empty() {
        out.push(SymbolicSubset::empty(e));
    }
    out
}

fn check_space(statement: Statement, name: &str, e: &SpaceExpr, expected: Option<&Expected>, t: &mut Tally) {
    let e = e.normalize();
    let here = || name.to_string();
    if let Err(err) = space_statement(statement, name, &e, expected, t) {
        t.error(&here, err);
    }
}

fn space_statement(statement: Statement, name: &str, e: &SpaceExpr, expected: Option<&Expected>, t: &mut Tally) -> Result<()> {
    let amalgam = Amalgam::new(e);
    let samples = sample_subsets(e, amalgam.as_ref());
    let whole = || name.to_string();
    let at = |s: &SymbolicSubset| {
        let s = s.clone();
        move || format!("{name}, subset {s:?}")
    };
    match statement {
        Statement::WvInverse => {
            for s in &samples {
                let here = at(s);
                let by_inverse = topology::is_weakly_visible_via_inverse(e, s)?;
                match topology::weakly_visible_pair(e, s) {
                    Ok(pair) => {
                        t.instances += 1;
                        t.check(&here, "pair search agrees with the dual", by_inverse, pair.is_some());
                        if let Some((w1, w2)) = pair {
                            t.check(&here, "pair is Thomason and cuts out the subset", (true, true, s.clone()),
                                (topology::is_thomason(e, &w1)?, topology::is_thomason(e, &w2)?, w1.difference(&w2)?));
                        }
                    }
                    Err(Error::CapExceeded { .. }) => {}
                    Err(err) => return Err(err),
                }
                if let Some(a) = &amalgam {
                    t.check(&here, "oracle weak visibility", a.oracle.is_weakly_visible(a.bits(e, s)), by_inverse);
                }
            }
        }
        Statement::Finiteness => {
            t.instances += 1;
            let props = topology::space_props(e)?;
            t.check(&whole, "finite = weakly Noetherian and inverse-Noetherian", props.is_finite,
                props.is_weakly_noetherian && props.is_inverse_noetherian);
            if props.is_noetherian {
                t.check(&whole, "Noetherian implies weakly Noetherian", true, props.is_weakly_noetherian);
            }
            if props.is_weakly_noetherian && props.is_inverse_noetherian {
                for class in e.point_classes() {
                    let single = class.representative().singleton(e)?;
                    t.check(&whole, "point isolated in the patch topology", true, topology::is_constructible(e, &single)?);
                }
            }
            if let Some(chain) = &props.descending_chain {
                t.check(&whole, "descending chain of closed sets", true, chain.check(6)?);
            }
            if let Some(chain) = &props.inverse_descending_chain {
                t.check(&whole, "descending chain of inverse-closed sets", true, chain.check(6)?);
            }
            if let Some(class) = props.invisible_class() {
                let single = class.representative().singleton(e)?;
                t.check(&whole, "invisible point", false, topology::is_weakly_visible(e, &single)?);
            }
            if let Some(x) = expected {
                t.check(&whole, "flags (finite, Noetherian, inverse-Noetherian, weakly Noetherian)",
                    (x.finite, x.noetherian, x.inverse_noetherian, x.weakly_noetherian),
                    (props.is_finite, props.is_noetherian, props.is_inverse_noetherian, props.is_weakly_noetherian));
            }
            if let Some(a) = &amalgam {
                t.check(&whole, "oracle weakly Noetherian", a.oracle.weakly_noetherian(), props.is_weakly_noetherian);
            }
        }
        Statement::FgLemmaConsistency => {
            let mut fg_ideals = Vec::new();
            for s in &samples {
                t.instances += 1;
                let here = at(s);
                let qc = topology::is_quasi_compact_open(e, s)?;
                let cons = topology::is_constructible(e, s)?;
                let gen_closed = topology::generalization_closure(e, s)? == *s;
                t.check(&here, "quasi-compact open = constructible and generalization-closed", qc, cons && gen_closed);
                if let Some(a) = &amalgam {
                    let bits = a.bits(e, s);
                    t.check(&here, "oracle quasi-compact open", a.oracle.is_open(bits), qc);
                    t.check(&here, "oracle constructible", a.oracle.is_constructible(bits), cons);
                    t.check(&here, "oracle Thomason", a.oracle.is_thomason(bits), topology::is_thomason(e, s)?);
                }
                if topology::is_thomason(e, s)? {
                    let ideal = RadicalIdeal::from_thomason(e, s.clone())?;
                    let complement = s.complement();
                    let fg = ideal.is_finitely_generated();
                    t.check(&here, "finitely generated = complement constructible", topology::is_constructible(e, &complement)?, fg);
                    t.check(&here, "finitely generated = complement quasi-compact open", topology::is_quasi_compact_open(e, &complement)?, fg);
                    if fg {
                        fg_ideals.push(ideal);
                    }
                } else {
                    t.check(&here, "non-Thomason subsets support no ideal", Err(Error::NotThomason),
                        RadicalIdeal::from_thomason(e, s.clone()).map(|_| ()));
                }
            }
            for (i, a) in fg_ideals.iter().enumerate() {
                for b in &fg_ideals[i..] {
                    t.instances += 1;
                    let here = || format!("{name}, join of {:?} and {:?}", a.support(), b.support());
                    t.check(&here, "join of finitely generated ideals is finitely generated", true, a.join(b)?.is_finitely_generated());
                }
            }
            for class in e.point_classes() {
                t.instances += 1;
                let here = || format!("{name}, prime at {}", e.describe_class(&class));
                let prime = PrimeIdeal::at_class(e, &class)?;
                let gen = topology::generalizations_of_class(e, &class)?;
                t.check(&here, "prime support is the complement of gen", gen.complement(), prime.support());
                t.check(&here, "prime fg = gen quasi-compact open", topology::is_quasi_compact_open(e, &gen)?, prime.is_finitely_generated());
            }
        }
        Statement::Proposition => {
            t.instances += 1;
            let r = tt::cohen_report(e)?;
            t.check(&whole, "radical fg = prime fg = inverse-Noetherian",
                (r.every_radical_fg, r.every_radical_fg), (r.every_prime_fg, r.inverse_noetherian));
            if let Some(x) = expected {
                t.check(&whole, "inverse-Noetherian", x.inverse_noetherian, r.inverse_noetherian);
            }
            if let Some(ideal) = &r.non_fg_radical {
                t.check(&whole, "witness radical ideal is not finitely generated", false, ideal.is_finitely_generated());
            }
            if let Some(prime) = &r.non_fg_prime {
                t.check(&whole, "witness prime is not finitely generated", false, prime.is_finitely_generated());
            }
            t.check(&whole, "non-fg prime witness present", !r.every_prime_fg, r.non_fg_prime.is_some());
            if let Some(a) = &amalgam {
                t.check(&whole, "oracle radical fg", a.oracle.every_radical_fg(), r.every_radical_fg);
                t.check(&whole, "oracle prime fg", a.oracle.every_prime_fg(), r.every_prime_fg);
            }
        }
        Statement::Theorem => {
            t.instances += 1;
            let r = tt::cohen_report(e)?;
            let wn = r.weakly_noetherian;
            t.check(&whole, "weakly Noetherian and radical fg = finite", r.finite, wn && r.every_radical_fg);
            t.check(&whole, "weakly Noetherian and prime fg = finite", r.finite, wn && r.every_prime_fg);
            t.check(&whole, "finite", e.is_finite(), r.finite);
            if let Some(x) = expected {
                t.check(&whole, "expected finite", x.finite, r.finite);
            }
            if wn && !r.finite {
                t.check(&whole, "non-fg prime exists", true, tt::find_non_fg_prime(e)?.is_some());
            }
        }
        Statement::Remark => {
            t.instances += 1;
            match tt::count_radical_ideals(e)? {
                RadicalIdealCount::Finite(k) => {
                    t.check(&whole, "finitely many radical ideals = finite", e.is_finite(), true);
                    if let Some(x) = expected {
                        t.check(&whole, "radical ideals", x.radical_ideals, Some(k));
                    }
                    if let Some(a) = &amalgam {
                        t.check(&whole, "oracle radical ideals", a.oracle.thomason_sets().len() as u128, k);
                        t.check(&whole, "down-sets of the amalgam", a.poset.count_down_sets(), k);
                    }
                }
                RadicalIdealCount::Infinite(family) => {
                    t.check(&whole, "finitely many radical ideals = finite", e.is_finite(), false);
                    let members: Vec<SymbolicSubset> = (0..6).map(|k| family.support(k)).collect();
                    for (k, m) in members.iter().enumerate() {
                        t.check(&whole, "family member is Thomason", true, topology::is_thomason(e, m)?);
                        t.check(&whole, "family members are distinct", false, members[..k].contains(m));
                    }
                }
            }
        }
        Statement::DualityInvolution => {
            t.instances += 1;
            let dual = e.dual();
            t.check(&whole, "dual of dual", e.clone(), dual.dual());
            t.check(&whole, "normalize is idempotent", e.clone(), e.normalize());
            for s in &samples {
                t.instances += 1;
                let here = at(s);
                t.check(&here, "Thomason = open in the dual", topology::is_thomason(e, s)?, topology::is_open(&dual, s)?);
                t.check(&here, "constructible in the dual", topology::is_constructible(e, s)?, topology::is_constructible(&dual, s)?);
                t.check(&here, "closure in the dual = generalization closure", topology::generalization_closure(e, s)?, topology::closure(&dual, s)?);
            }
        }
    }
    Ok(())
}

/// Random posets beyond the exhaustive range: both weak-visibility routes
/// agree on every subset, and the down-set count matches enumeration and a
/// direct filter over all subsets.
pub fn check_random_posets(seed: u64, count: u64) -> Result<CheckResult> {
    let start = Instant::now();
    let posets: Vec<FinitePoset> = (0..count)
        .map(|k| posets::random_poset(seed.wrapping_add(k), 6 + (k % 5) as usize))
        .collect::<Result<_>>()?;
    let parts: Vec<Tally> = posets
        .par_iter()
        .map(|p| {
            let mut t = Tally::default();
            let here = || format!("{p:?}");
            if let Err(err) = random_poset_checks(p, &mut t) {
                t.error(&here, err);
            }
            t
        })
        .collect();
    let mut tally = Tally::default();
    for t in parts {
        tally.absorb(t);
    }
    Ok(CheckResult {
        statement: "random-posets".into(),
        instances: tally.instances,
        failures: tally.failures,
        elapsed: start.elapsed(),
    })
}

fn random_poset_checks(p: &FinitePoset, t: &mut Tally) -> Result<()> {
    let n = p.len();
    let e = SpaceExpr::finite(p.clone());
    let here = || format!("{p:?}");
    let down_closed = |bits: u64| {
        (0..n).all(|x| bits >> x & 1 == 0 || (0..n).all(|y| !p.leq(y, x) || bits >> y & 1 == 1))
    };
    let filtered = (0..1u64 << n).filter(|&b| down_closed(b)).count() as u128;
    t.instances += 1;
    t.check(&here, "down-set count", filtered, p.count_down_sets());
    t.check(&here, "enumerated down-sets", filtered, p.down_sets(DEFAULT_DOWN_SET_CAP)?.count() as u128);
    for s in FiniteSubset::all(n) {
        t.instances += 1;
        let sub = SymbolicSubset::Finite(s);
        let at = || format!("{p:?}, subset {s:?}");
        let pair = topology::weakly_visible_pair(&e, &sub)?;
        let by_inverse = topology::is_weakly_visible_via_inverse(&e, &sub)?;
        t.check(&at, "pair search agrees with the dual", by_inverse, pair.is_some());
        let convex = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| !(s.contains(x) && s.contains(z) && p.leq(x, y) && p.leq(y, z)) || s.contains(y))
            })
        });
        t.check(&at, "weakly visible = convex", convex, by_inverse);
    }
    Ok(())
}

/// Every statement over posets up to `max_n` and the catalog, then the random run.
pub fn verify(max_n: usize, seed: u64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for statement in Statement::ALL {
        out.push(check_statement(statement, &Scope::Both(max_n))?);
    }
    out.push(check_random_posets(seed, 20)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_ids_round_trip() {
        for st in Statement::ALL {
            assert_eq!(st.id().parse::<Statement>().unwrap(), st);
        }
        assert!("lemma".parse::<Statement>().is_err());
    }

    #[test]
    fn every_statement_passes_on_small_posets_and_catalog() {
        for st in Statement::ALL {
            let r = check_statement(st, &Scope::Both(3)).unwrap();
            assert!(r.passed(), "{st}: {:?}", r.failures.first());
            assert!(r.instances > 0);
        }
    }

    #[test]
    fn wv_instance_count_is_sum_of_subset_counts() {
        let r = check_statement(Statement::WvInverse, &Scope::Posets(3)).unwrap();
        // 1·1 + 1·2 + 3·4 + 19·8
        assert_eq!(r.instances, 1 + 2 + 12 + 152);
    }

    #[test]
    fn amalgam_round_trips_bits() {
        let e = SpaceExpr::sum(vec![
            SpaceExpr::finite(catalog::chain(2)),
            SpaceExpr::finite(catalog::antichain2()),
        ])
        .normalize();
        let a = Amalgam::new(&e).unwrap();
        for bits in 0..16 {
            assert_eq!(a.bits(&e, &a.subset(&e, bits)), bits);
        }
    }

    #[test]
    fn random_run_passes() {
        let r = check_random_posets(7, 5).unwrap();
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    #[test]
    fn oversized_scope_is_an_error() {
        assert!(check_statement(Statement::Remark, &Scope::Posets(7)).is_err());
    }
}
