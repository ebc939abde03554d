use std::fmt::Write;

use crate::pointset::PointSet;
use crate::space::Semitopology;

/// `x ⋔ y` and the complement of `x` also meets `y`.
pub fn flanks(universe: PointSet, x: PointSet, y: PointSet) -> bool {
    x.meets(y) && (universe - x).meets(y)
}

/// Nonempty opens joined when they intersect.
#[derive(Clone, Debug)]
pub struct IntersectionGraph<'a> {
    s: &'a Semitopology,
    pub nodes: Vec<PointSet>,
}

impl<'a> IntersectionGraph<'a> {
    pub fn new(s: &'a Semitopology) -> Self {
        IntersectionGraph {
            s,
            nodes: s.nonempty_opens().to_vec(),
        }
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.nodes.len() {
            for j in i + 1..self.nodes.len() {
                if self.nodes[i].meets(self.nodes[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn neighbours(&self, o: PointSet) -> impl Iterator<Item = PointSet> + '_ {
        self.nodes.iter().copied().filter(move |x| x.meets(o))
    }

    /// Every neighbour of `o` is a neighbour of `o2`.
    pub fn node_le(&self, o: PointSet, o2: PointSet) -> bool {
        self.neighbours(o).all(|x| x.meets(o2))
    }

    /// Ordered pairs `(i, j)` with node `i` properly subintersecting node `j`.
    pub fn flank_edges(&self) -> Vec<(usize, usize)> {
        let u = self.s.universe();
        let mut out = Vec::new();
        for (i, &x) in self.nodes.iter().enumerate() {
            for (j, &y) in self.nodes.iter().enumerate() {
                if i != j && flanks(u, x, y) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn node_name(&self, o: PointSet) -> String {
        self.s.set_labels(o).join(",")
    }

    /// DOT text. Self-loops are omitted unless asked for.
    pub fn to_dot(&self, self_loops: bool, with_flanks: bool) -> String {
        let mut out = String::new();
        let (kind, sep) = if with_flanks {
            ("digraph", "->")
        } else {
            ("graph", "--")
        };
        writeln!(out, "{} intersections {{", kind).unwrap();
        for &o in &self.nodes {
            writeln!(out, "  \"{}\";", self.node_name(o)).unwrap();
        }
        let extra = if with_flanks { " [dir=none]" } else { "" };
        if self_loops {
            for &o in &self.nodes {
                let n = self.node_name(o);
                writeln!(out, "  \"{}\" {} \"{}\"{};", n, sep, n, extra).unwrap();
            }
        }
        for (i, j) in self.edges() {
            writeln!(
                out,
                "  \"{}\" {} \"{}\"{};",
                self.node_name(self.nodes[i]),
                sep,
                self.node_name(self.nodes[j]),
                extra
            )
            .unwrap();
        }
        if with_flanks {
            for (i, j) in self.flank_edges() {
                writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [style=dashed, color=blue];",
                    self.node_name(self.nodes[i]),
                    self.node_name(self.nodes[j])
                )
                .unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}
