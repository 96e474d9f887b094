//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::order::FinitePoset;
use crate::space::{Leaf, SpaceExpr};

/// The poset of a finite space: a sum becomes the disjoint union of its
/// leaves, with labels prefixed by the leaf number. `what` names the
/// operation in the error for infinite spaces.
pub fn finite_poset(e: &SpaceExpr, what: &'static str) -> Result<FinitePoset> {
    let e = e.normalize();
    let leaves = e.leaves();
    let mut parts = Vec::with_capacity(leaves.len());
    for (_, leaf) in leaves {
        match leaf {
            Leaf::Finite(p) => parts.push(p.clone()),
            Leaf::Antichain { .. } => return Err(Error::NotFinite(what)),
        }
    }
    match &e {
        SpaceExpr::Finite(p) => Ok(p.clone()),
        _ => FinitePoset::disjoint_union(&parts),
    }
}

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Nodes in element order, then covering edges from specialization to
/// generization in lexicographic order.
pub fn hasse_dot(p: &FinitePoset) -> String {
    let mut out = String::from("digraph hasse {\n");
    for label in p.labels() {
        let _ = writeln!(out, "  {};", quote(label));
    }
    for (a, b) in p.covering_pairs() {
        let _ = writeln!(out, "  {} -> {};", quote(p.label(a)), quote(p.label(b)));
    }
    out.push_str("}\n");
    out
}

pub fn space_dot(e: &SpaceExpr) -> Result<String> {
    Ok(hasse_dot(&finite_poset(e, "a Hasse diagram")?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn three_chain() {
        let dot = hasse_dot(&catalog::chain(3));
        assert_eq!(dot, "digraph hasse {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -> \"b\";\n  \"b\" -> \"c\";\n}\n");
    }

    #[test]
    fn labels_are_escaped() {
        let p = FinitePoset::build(&["x\"y", "back\\slash"], &[("x\"y", "back\\slash")]).unwrap();
        assert!(hasse_dot(&p).contains("\"x\\\"y\" -> \"back\\\\slash\";"));
    }

    #[test]
    fn sums_and_duals() {
        let e = SpaceExpr::dual_of(SpaceExpr::sum(vec![
            SpaceExpr::finite(catalog::chain(2)),
            SpaceExpr::finite(catalog::point()),
        ]));
        let dot = space_dot(&e).unwrap();
        assert!(dot.contains("\"0:b\" -> \"0:a\";"), "{dot}");
        assert!(dot.contains("\"1:a\";"));
        assert!(matches!(space_dot(&SpaceExpr::goa()), Err(Error::NotFinite(_))));
    }
}
