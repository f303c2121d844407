//! JSON and Graphviz renderings of a built poset. Both outputs depend only on
//! the poset, so equal inputs give byte-identical text.

use std::fmt::{self, Display, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GradedPoset;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// 132-avoiding permutations under descent-set containment.
    P,
    /// Noncrossing partitions under refinement.
    Q,
}

impl Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::P => "P",
            Family::Q => "Q",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "P" => Ok(Family::P),
            "Q" => Ok(Family::Q),
            _ => Err(Error::Parse(format!(
                "unknown family {s:?}, expected P or Q"
            ))),
        }
    }
}

/// Wire form of an exported poset. `ranks[i]` is the rank of `elements[i]`;
/// `covers` holds `[lower, upper]` index pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetExport {
    pub n: usize,
    pub family: Family,
    pub elements: Vec<String>,
    pub ranks: Vec<usize>,
    pub rank_sizes: Vec<usize>,
    pub covers: Vec<[usize; 2]>,
}

impl PosetExport {
    pub fn new<T: Display>(n: usize, family: Family, poset: &GradedPoset<T>) -> Self {
        Self {
            n,
            family,
            elements: poset.elements().iter().map(ToString::to_string).collect(),
            ranks: poset.ranks().to_vec(),
            rank_sizes: poset.rank_sizes(),
            covers: poset.covers().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

/// Single-line JSON followed by a newline.
pub fn to_json<T: Display>(n: usize, family: Family, poset: &GradedPoset<T>) -> String {
    let mut s = serde_json::to_string(&PosetExport::new(n, family, poset))
        .expect("export struct always serializes");
    s.push('\n');
    s
}

/// Hasse diagram drawn bottom-up, one `rank=same` group per rank.
pub fn to_dot<T: Display>(n: usize, family: Family, poset: &GradedPoset<T>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {family}{n} {{");
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, e) in poset.elements().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{e}\"];");
    }
    for r in 0..poset.rank_sizes().len() {
        out.push_str("  { rank=same;");
        for i in (0..poset.len()).filter(|&i| poset.rank(i) == r) {
            let _ = write!(out, " n{i};");
        }
        out.push_str(" }\n");
    }
    for &(a, b) in poset.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{build_poset_p, build_poset_q};

    #[test]
    fn json_shape() {
        let q = build_poset_q(4).unwrap();
        let json = to_json(4, Family::Q, &q);
        let back: PosetExport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.rank_sizes, vec![1, 6, 6, 1]);
        assert_eq!(back.elements.len(), 14);
        assert_eq!(back.elements[0], "{1,2,3,4}");
        assert_eq!(back.family, Family::Q);
        assert!(json.starts_with("{\"n\":4,\"family\":\"Q\",\"elements\":["));
        assert_eq!(json, to_json(4, Family::Q, &build_poset_q(4).unwrap()));
    }

    #[test]
    fn dot_for_a_single_element() {
        let p = build_poset_p(1).unwrap();
        assert_eq!(
            to_dot(1, Family::P, &p),
            "digraph P1 {\n  rankdir=BT;\n  node [shape=plaintext];\n  n0 [label=\"1\"];\n  { rank=same; n0; }\n}\n"
        );
    }

    #[test]
    fn dot_lists_every_cover() {
        let p = build_poset_p(4).unwrap();
        let dot = to_dot(4, Family::P, &p);
        assert_eq!(dot.matches(" -> ").count(), p.covers().len());
        assert_eq!(dot.matches("rank=same").count(), 4);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("P".parse::<Family>().unwrap(), Family::P);
        assert!("p".parse::<Family>().is_err());
    }
}
