//! Valued translation quivers with DOT export.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverArrow {
    pub from: usize,
    pub to: usize,
    pub valuation: (usize, usize),
}

/// Vertices are isoclasses of indecomposables; `tau[z]` is the translate of a
/// non-projective vertex.
#[derive(Clone, Debug, Default, Serialize)]
pub struct TranslationQuiver {
    pub labels: Vec<String>,
    pub arrows: Vec<QuiverArrow>,
    pub tau: Vec<Option<usize>>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
}

impl TranslationQuiver {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn tau_inv(&self, x: usize) -> Option<usize> {
        self.tau.iter().position(|t| *t == Some(x))
    }

    pub fn successors(&self, x: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.from == x).map(|a| a.to).collect()
    }

    pub fn predecessors(&self, x: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.to == x).map(|a| a.from).collect()
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.arrows.iter().any(|a| a.from == from && a.to == to)
    }

    /// No projective or injective vertices and `tau` is a bijection.
    pub fn is_stable(&self) -> bool {
        if self.projective.iter().any(|&b| b) || self.injective.iter().any(|&b| b) {
            return false;
        }
        let mut seen = BTreeSet::new();
        self.tau.iter().all(|t| matches!(t, Some(x) if seen.insert(*x)))
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = Vec::new();
            while let Some(x) = stack.pop() {
                members.push(x);
                for a in &self.arrows {
                    let y = if a.from == x {
                        a.to
                    } else if a.to == x {
                        a.from
                    } else {
                        continue;
                    };
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Full subquiver on `keep`, with `tau` restricted to vertices whose
    /// translate is kept.
    pub fn induced(&self, keep: &[usize]) -> (TranslationQuiver, Vec<usize>) {
        let mut index = vec![usize::MAX; self.len()];
        for (i, &x) in keep.iter().enumerate() {
            index[x] = i;
        }
        let arrows = self
            .arrows
            .iter()
            .filter(|a| index[a.from] != usize::MAX && index[a.to] != usize::MAX)
            .map(|a| QuiverArrow { from: index[a.from], to: index[a.to], valuation: a.valuation })
            .collect();
        let q = TranslationQuiver {
            labels: keep.iter().map(|&x| self.labels[x].clone()).collect(),
            arrows,
            tau: keep
                .iter()
                .map(|&x| self.tau[x].and_then(|t| (index[t] != usize::MAX).then(|| index[t])))
                .collect(),
            projective: keep.iter().map(|&x| self.projective[x]).collect(),
            injective: keep.iter().map(|&x| self.injective[x]).collect(),
        };
        (q, index)
    }

    /// Graphviz rendering; translation shown as dashed edges.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", name.replace('"', "'"));
        let _ = writeln!(s, "  rankdir=LR;");
        for (i, l) in self.labels.iter().enumerate() {
            let shape = if self.projective[i] || self.injective[i] { "box" } else { "ellipse" };
            let _ = writeln!(s, "  n{i} [label=\"{}\", shape={shape}];", l.replace('"', "'"));
        }
        for a in &self.arrows {
            if a.valuation == (1, 1) {
                let _ = writeln!(s, "  n{} -> n{};", a.from, a.to);
            } else {
                let _ = writeln!(s, "  n{} -> n{} [label=\"({},{})\"];", a.from, a.to, a.valuation.0, a.valuation.1);
            }
        }
        for (z, t) in self.tau.iter().enumerate() {
            if let Some(x) = t {
                let _ = writeln!(s, "  n{z} -> n{x} [style=dashed, color=gray, constraint=false];");
            }
        }
        s.push_str("}\n");
        s
    }
}
