//! Graph descriptions (DOT) of assembled interpretations: the elements and
//! mapping entries of the domains, or the worlds and their accessibility.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use petgraph::dot::{Config, Dot};
use petgraph::graph::{DiGraph, NodeIndex};

use crate::interp::{Element, Interpretation, MappedValue, SymbolKind, TarskianInterpretation, WorldInterpretation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum View {
    Domains,
    Worlds,
}

impl fmt::Display for View {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            View::Domains => "domains",
            View::Worlds => "worlds",
        })
    }
}

impl FromStr for View {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "domains" => Ok(View::Domains),
            "worlds" => Ok(View::Worlds),
            other => Err(format!("unknown view {:?} (expected domains or worlds)", other)),
        }
    }
}

#[derive(Debug, Clone)]
struct Node {
    label: String,
    attrs: &'static str,
}

#[derive(Debug, Clone)]
struct Edge {
    label: String,
    attrs: &'static str,
}

#[derive(Default)]
struct Builder {
    graph: DiGraph<Node, Edge>,
    index: HashMap<String, NodeIndex>,
}

impl Builder {
    fn node(&mut self, key: String, label: String, attrs: &'static str) -> NodeIndex {
        if let Some(i) = self.index.get(&key) {
            return *i;
        }
        let i = self.graph.add_node(Node { label, attrs });
        self.index.insert(key, i);
        i
    }

    fn edge(&mut self, from: NodeIndex, to: NodeIndex, label: String, attrs: &'static str) {
        self.graph.add_edge(from, to, Edge { label, attrs });
    }

    fn finish(self) -> String {
        let edge_attrs = |_, e: petgraph::graph::EdgeReference<'_, Edge>| {
            let e = e.weight();
            let label = (!e.label.is_empty()).then(|| format!("label = {:?}", e.label));
            label.into_iter().chain((!e.attrs.is_empty()).then(|| e.attrs.to_string())).collect::<Vec<_>>().join(", ")
        };
        let node_attrs = |_, (_, n): (NodeIndex, &Node)| {
            let label = format!("label = {:?}", n.label);
            if n.attrs.is_empty() {
                label
            } else {
                format!("{}, {}", label, n.attrs)
            }
        };
        format!(
            "{:?}",
            Dot::with_attr_getters(&self.graph, &[Config::EdgeNoLabel, Config::NodeNoLabel], &edge_attrs, &node_attrs)
        )
    }
}

pub fn to_dot(interp: &Interpretation, view: View) -> String {
    let mut b = Builder::default();
    match (interp, view) {
        (Interpretation::Tarskian(t), View::Domains) => domains(&mut b, t, None),
        (Interpretation::Kripke(k), View::Domains) => {
            for (w, wi) in &k.per_world {
                domains(&mut b, &wi.tarskian, Some((w, wi)));
            }
        }
        (Interpretation::Tarskian(_), View::Worlds) => {}
        (Interpretation::Kripke(k), View::Worlds) => {
            for w in &k.worlds {
                let attrs = if k.local_world.as_ref() == Some(w) {
                    "peripheries = 2"
                } else {
                    ""
                };
                b.node(w.clone(), w.clone(), attrs);
            }
            for w in &k.worlds {
                for v in k.accessible_from(w) {
                    let (from, to) = (b.index[w], b.index[v]);
                    b.edge(from, to, String::new(), "");
                }
            }
        }
    }
    b.finish()
}

fn domains(b: &mut Builder, t: &TarskianInterpretation, world: Option<(&String, &WorldInterpretation)>) {
    let suffix = world.map(|(w, _)| format!("@{}", w)).unwrap_or_default();
    let key = |e: &Element| format!("{}{}", e, suffix);
    for d in t.domains.values() {
        for e in d.elements.finite().unwrap_or_default() {
            let missing = world.is_some_and(|(_, wi)| !wi.exists(&d.domain_type, e));
            let attrs = if missing { "style = dashed" } else { "" };
            b.node(key(e), format!("{}{}", e, suffix), attrs);
        }
    }
    let element = |b: &mut Builder, e: &Element| b.node(key(e), format!("{}{}", e, suffix), "");
    for m in t.mappings.values() {
        for (args, value) in &m.entries {
            let call = if args.is_empty() {
                m.symbol.clone()
            } else {
                format!("{}({})", m.symbol, crate::interp::format_tuple(args))
            };
            match (m.kind, value, args.as_slice()) {
                (_, MappedValue::Lambda(_), _) => {
                    b.node(format!("{}{}", m.symbol, suffix), format!("{} = {}{}", m.symbol, value, suffix), "shape = note");
                }
                (SymbolKind::Function, MappedValue::Element(v), []) => {
                    let c = b.node(format!("const {}{}", m.symbol, suffix), format!("{}{}", m.symbol, suffix), "shape = plaintext");
                    let to = element(b, v);
                    b.edge(c, to, String::new(), "style = dashed");
                }
                (SymbolKind::Function, MappedValue::Element(v), [a]) => {
                    let (from, to) = (element(b, a), element(b, v));
                    b.edge(from, to, m.symbol.clone(), "");
                }
                (SymbolKind::Function, MappedValue::Element(v), [a, ..]) => {
                    let (from, to) = (element(b, a), element(b, v));
                    b.edge(from, to, call, "");
                }
                (_, MappedValue::Truth(true), [a]) => {
                    let n = b.node(format!("pred {}{}", call, suffix), m.symbol.clone(), "shape = box, style = rounded");
                    let e = element(b, a);
                    b.edge(e, n, String::new(), "style = dotted, arrowhead = none");
                }
                (_, MappedValue::Truth(true), [a, c]) => {
                    let (from, to) = (element(b, a), element(b, c));
                    b.edge(from, to, m.symbol.clone(), "style = dotted");
                }
                (_, MappedValue::Truth(true), _) => {
                    b.node(format!("pred {}{}", call, suffix), format!("{}{}", call, suffix), "shape = note");
                }
                _ => {}
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::assemble;
    use crate::syntax::parse_file;

    fn interp(text: &str) -> Interpretation {
        assemble(&parse_file(text).units).unwrap().0
    }

    #[test]
    fn function_entries_become_edges() {
        let i = interp("tff(t,type,t: $tType).\ntff(a,type,a: t).\ntff(f,type,f: t > t).\ntff(m,interpretation,( ( ! [X: t] : X = a ) & f(a) = a )).");
        let dot = to_dot(&i, View::Domains);
        assert!(dot.starts_with("digraph {"), "{}", dot);
        assert!(dot.contains("0 -> 0 [ label = \"f\"]"), "{}", dot);
    }

    #[test]
    fn tarskian_has_no_worlds() {
        let dot = to_dot(&Interpretation::Tarskian(TarskianInterpretation::default()), View::Worlds);
        assert!(!dot.contains("label"));
    }

    #[test]
    fn view_names() {
        assert_eq!("worlds".parse::<View>().unwrap(), View::Worlds);
        assert!("planets".parse::<View>().is_err());
    }
}
