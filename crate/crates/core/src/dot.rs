//! DOT emitters for graphs, extension balls, and building 1-skeleta.

use std::fmt::Write;

use crate::complex::{BuildingBall, ExtensionBall};
use crate::graph::SimpleGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders a simple graph. Isolated vertices are listed explicitly.
pub fn simple_graph(g: &SimpleGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        if g.link(v).is_empty() {
            let _ = writeln!(out, "  {};", quote(g.name(v)));
        }
    }
    for (i, j) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(g.name(i)), quote(g.name(j)));
    }
    out.push_str("}\n");
    out
}

/// Renders the 1-skeleton of an extension ball; node labels are the
/// conjugated vertex groups.
pub fn extension_ball(ball: &ExtensionBall) -> String {
    let graph = ball.presentation().graph();
    let mut out = String::from("graph extension {\n");
    for (i, p) in ball.nodes().iter().enumerate() {
        let v = graph.name(p.type_set().min_vertex());
        let label = if p.conjugator().is_identity() {
            format!("G_{v}")
        } else {
            format!("{}·G_{v}", p.conjugator())
        };
        let _ = writeln!(out, "  n{} [label={}];", i, quote(&label));
    }
    for (a, b) in ball.edges() {
        let _ = writeln!(out, "  n{a} -- n{b};");
    }
    out.push_str("}\n");
    out
}

/// Renders the 1-skeleton of a building ball with the rank as a node
/// attribute.
pub fn building_ball(ball: &BuildingBall) -> String {
    let graph = ball.presentation().graph();
    let mut out = String::from("graph building {\n");
    for (i, c) in ball.nodes().iter().enumerate() {
        let clique = graph.set_names(c.clique).join(",");
        let label = format!("{}·G_{{{}}}", c.rep, clique);
        let _ = writeln!(
            out,
            "  n{} [label={}, rank={}];",
            i,
            quote(&label),
            c.rank()
        );
    }
    for (a, b) in ball.edges() {
        let _ = writeln!(out, "  n{a} -- n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::VertexLabel;
    use crate::word::Presentation;

    #[test]
    fn graph_dot_contains_all_edges_and_isolated_vertices() {
        let g = SimpleGraph::new(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let dot = simple_graph(&g);
        assert!(dot.contains("\"a\" -- \"b\";"));
        assert!(dot.contains("\"c\";"));
    }

    #[test]
    fn complex_dot_is_well_formed() {
        let g = SimpleGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let p = Presentation::uniform(g, VertexLabel::Cyclic { order: 2 }).unwrap();
        let ext = crate::complex::extension_ball(&p, 1).unwrap();
        let dot = extension_ball(&ext);
        assert!(dot.starts_with("graph extension {"));
        assert!(dot.contains("n0 -- n1;"));
        let b = crate::complex::building_ball(&p, 1).unwrap();
        let dot = building_ball(&b);
        assert!(dot.contains("rank=0"));
        assert!(dot.contains("rank=1"));
    }
}
