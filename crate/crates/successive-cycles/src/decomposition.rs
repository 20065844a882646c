//! Strongly connected components of a quiver whose components are simple cycles, and the acyclic
//! quiver Q̂ obtained by contracting each of them to a vertex.

use algebra_core::{Arrow, Quiver, VertexId};
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::SuccessiveError;

/// A vertex of Q̂: either a single vertex without loops or a simple cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Vertices in cycle order, starting at the smallest.
    pub vertices: Vec<VertexId>,
    /// `cycle_arrows[t]` leaves `vertices[t]`; empty when the component has no cycle.
    pub cycle_arrows: Vec<usize>,
}

impl Component {
    pub fn cycle_length(&self) -> usize {
        self.cycle_arrows.len()
    }

    pub fn is_cycle(&self) -> bool {
        !self.cycle_arrows.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessiveDecomposition {
    pub quiver: Quiver,
    /// Ordered by smallest vertex.
    pub components: Vec<Component>,
    /// Component of each vertex, indexed by `vertex − 1`.
    pub component_of: Vec<usize>,
    /// Q̂ with vertex c + 1 for component c; its arrows keep the ids of the base arrows of Q.
    pub base: Quiver,
    /// Arrow k of Q̂ is arrow `base_arrows[k]` of Q.
    pub base_arrows: Vec<usize>,
}

pub fn detect_successive(q: &Quiver) -> Result<SuccessiveDecomposition, SuccessiveError> {
    let n = q.vertex_count();
    let mut graph = DiGraph::<(), usize>::new();
    let nodes: Vec<NodeIndex> = (0..n).map(|_| graph.add_node(())).collect();
    for (k, a) in q.arrows().iter().enumerate() {
        graph.add_edge(nodes[a.tail - 1], nodes[a.head - 1], k);
    }
    let mut sccs: Vec<Vec<VertexId>> = tarjan_scc(&graph)
        .into_iter()
        .map(|scc| {
            let mut vs: Vec<VertexId> = scc.iter().map(|ix| ix.index() + 1).collect();
            vs.sort_unstable();
            vs
        })
        .collect();
    sccs.sort();

    let mut component_of = vec![0; n];
    for (c, vs) in sccs.iter().enumerate() {
        for &v in vs {
            component_of[v - 1] = c;
        }
    }
    let mut components = Vec::with_capacity(sccs.len());
    for (c, vs) in sccs.iter().enumerate() {
        let inside = |v: VertexId| -> Vec<usize> {
            q.outgoing(v).into_iter().filter(|&k| component_of[q.arrow(k).head - 1] == c).collect()
        };
        let not_simple = || SuccessiveError::NotSuccessive { vertices: vs.clone() };
        for &v in vs {
            let incoming = q.incoming(v).into_iter().filter(|&k| component_of[q.arrow(k).tail - 1] == c).count();
            let outgoing = inside(v).len();
            if outgoing > 1 || incoming > 1 || (vs.len() > 1 && outgoing == 0) {
                return Err(not_simple());
            }
        }
        let first = vs[0];
        let mut component = Component { vertices: vec![first], cycle_arrows: Vec::new() };
        if let Some(&k) = inside(first).first() {
            component.cycle_arrows.push(k);
            let mut v = q.arrow(k).head;
            while v != first {
                component.vertices.push(v);
                let k = inside(v)[0];
                component.cycle_arrows.push(k);
                v = q.arrow(k).head;
            }
        }
        if component.vertices.len() != vs.len() {
            return Err(not_simple());
        }
        components.push(component);
    }

    let base_arrows: Vec<usize> = (0..q.arrows().len())
        .filter(|&k| {
            let a = q.arrow(k);
            component_of[a.tail - 1] != component_of[a.head - 1]
        })
        .collect();
    let base = Quiver::new(
        components.len(),
        base_arrows
            .iter()
            .map(|&k| {
                let a = q.arrow(k);
                Arrow { id: a.id.clone(), tail: component_of[a.tail - 1] + 1, head: component_of[a.head - 1] + 1 }
            })
            .collect(),
    )
    .expect("component indices are in range and ids are unique");
    Ok(SuccessiveDecomposition { quiver: q.clone(), components, component_of, base, base_arrows })
}

impl SuccessiveDecomposition {
    /// Cycle length n_c of every component, 0 for components without a cycle.
    pub fn pasted(&self) -> Vec<usize> {
        self.components.iter().map(Component::cycle_length).collect()
    }

    pub fn component(&self, v: VertexId) -> &Component {
        &self.components[self.component_of[v - 1]]
    }

    /// Position of v in the cycle order of its component.
    pub fn position(&self, v: VertexId) -> usize {
        self.component(v).vertices.iter().position(|&u| u == v).expect("vertex lies in its component")
    }

    pub fn is_cycle_arrow(&self, k: usize) -> bool {
        !self.base_arrows.contains(&k)
    }

    /// Arrows of the shortest segment from `from` to `to` inside one component, in travel order.
    pub fn segment(&self, from: VertexId, to: VertexId) -> Vec<usize> {
        let c = self.component(from);
        let mut arrows = Vec::new();
        let mut t = self.position(from);
        while c.vertices[t] != to {
            arrows.push(c.cycle_arrows[t]);
            t = (t + 1) % c.vertices.len();
        }
        arrows
    }

    /// The cycle τ_v at v as arrows in travel order, empty when v lies on no cycle.
    pub fn cycle_at(&self, v: VertexId) -> Vec<usize> {
        let c = self.component(v);
        let start = self.position(v);
        (0..c.cycle_length()).map(|t| c.cycle_arrows[(start + t) % c.cycle_length()]).collect()
    }

    /// Paths of Q̂ starting at component c, as Q-arrow indices in travel order; trivial path first,
    /// then depth-first in arrow order.
    pub fn base_paths(&self, c: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.extend_paths(c, &mut Vec::new(), &mut out);
        out
    }

    fn extend_paths(&self, at: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for &k in &self.base_arrows {
            let a = self.quiver.arrow(k);
            if self.component_of[a.tail - 1] == at {
                prefix.push(k);
                self.extend_paths(self.component_of[a.head - 1], prefix, out);
                prefix.pop();
            }
        }
    }
}
