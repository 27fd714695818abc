//! Plumbing graphs: vertices are circle bundles over closed orientable
//! surfaces (genus, Euler number), edges are plumbings, and boundary legs
//! mark boundary tori. All edges are positive plumbings.

mod calculus;
mod io;
mod iso;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub use calculus::LensParams;
pub use io::GraphJson;

pub type VertexId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlumbingVertex {
    pub id: VertexId,
    pub genus: u32,
    pub euler_weight: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Bamboo,
    Circuit,
    Star,
    Other,
}

/// Weighted multigraph with boundary legs. Loops are rejected; parallel edges
/// are allowed and the graph may be disconnected.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<PlumbingVertex>,
    edges: Vec<(VertexId, VertexId)>,
    legs: Vec<VertexId>,
    next_id: VertexId,
}

impl PlumbingGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A genus-0 path with the given weights, in order.
    pub fn bamboo(weights: &[i64]) -> Self {
        let mut g = Self::new();
        let mut prev = None;
        for &w in weights {
            let v = g.add_vertex(0, w);
            if let Some(p) = prev {
                g.add_edge(p, v).expect("fresh vertices");
            }
            prev = Some(v);
        }
        g
    }

    /// A genus-0 cycle with the given weights; needs at least two vertices.
    pub fn circuit(weights: &[i64]) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::Parameter {
                name: "circuit length",
                value: weights.len() as i64,
                reason: "a circuit needs at least two vertices",
            });
        }
        let mut g = Self::bamboo(weights);
        let (first, last) = (g.vertices[0].id, g.vertices[weights.len() - 1].id);
        g.add_edge(last, first)?;
        Ok(g)
    }

    pub fn add_vertex(&mut self, genus: u32, euler_weight: i64) -> VertexId {
        let id = self.next_id;
        self.next_id += 1;
        self.vertices.push(PlumbingVertex { id, genus, euler_weight });
        id
    }

    /// Inserts a vertex with a caller-chosen id.
    pub fn insert_vertex(&mut self, v: PlumbingVertex) -> Result<()> {
        if self.contains(v.id) {
            return Err(Error::DuplicateVertex(v.id));
        }
        self.next_id = self.next_id.max(v.id + 1);
        self.vertices.push(v);
        Ok(())
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        self.require(a)?;
        self.require(b)?;
        if a == b {
            return Err(Error::Loop(a));
        }
        self.edges.push((a, b));
        Ok(())
    }

    pub fn add_leg(&mut self, v: VertexId) -> Result<()> {
        self.require(v)?;
        self.legs.push(v);
        Ok(())
    }

    /// Removes the leg at position `idx`, returning its anchor.
    pub fn remove_leg(&mut self, idx: usize) -> Result<VertexId> {
        if idx >= self.legs.len() {
            return Err(Error::MissingLeg(idx));
        }
        Ok(self.legs.remove(idx))
    }

    pub fn vertices(&self) -> &[PlumbingVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn legs(&self) -> &[VertexId] {
        &self.legs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.legs.is_empty()
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.vertices.iter().any(|v| v.id == id)
    }

    pub fn vertex(&self, id: VertexId) -> Option<&PlumbingVertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub(crate) fn vertex_mut(&mut self, id: VertexId) -> Option<&mut PlumbingVertex> {
        self.vertices.iter_mut().find(|v| v.id == id)
    }

    /// Adds `delta` to the Euler weight of `id`.
    pub fn shift_weight(&mut self, id: VertexId, delta: i64) -> Result<()> {
        let v = self.vertex_mut(id).ok_or(Error::UnknownVertex(id))?;
        v.euler_weight += delta;
        Ok(())
    }

    fn require(&self, id: VertexId) -> Result<()> {
        if self.contains(id) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(id))
        }
    }

    fn position(&self, id: VertexId) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    /// Number of edge endpoints at `id` (parallel edges counted separately).
    pub fn degree(&self, id: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == id || b == id).count()
    }

    /// Neighbors with multiplicity, in edge order.
    pub fn neighbors(&self, id: VertexId) -> Vec<VertexId> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == id {
                    Some(b)
                } else if b == id {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn legs_at(&self, id: VertexId) -> usize {
        self.legs.iter().filter(|&&l| l == id).count()
    }

    /// Removes a vertex with its incident edges and legs.
    pub fn remove_vertex(&mut self, id: VertexId) -> Result<PlumbingVertex> {
        let pos = self.position(id).ok_or(Error::UnknownVertex(id))?;
        self.edges.retain(|&(a, b)| a != id && b != id);
        self.legs.retain(|&l| l != id);
        Ok(self.vertices.remove(pos))
    }

    /// Removes one edge between `a` and `b`; returns whether one existed.
    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) -> bool {
        match self.edges.iter().position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
            Some(i) => {
                self.edges.remove(i);
                true
            }
            None => false,
        }
    }

    /// Disjoint union. Ids of `other` are shifted past this graph's ids; the
    /// returned map sends old ids of `other` to their new ids.
    pub fn disjoint_union(&self, other: &PlumbingGraph) -> (PlumbingGraph, BTreeMap<VertexId, VertexId>) {
        let mut out = self.clone();
        let offset = out.next_id;
        let map: BTreeMap<_, _> = other.vertices.iter().map(|v| (v.id, v.id + offset)).collect();
        for v in &other.vertices {
            out.vertices.push(PlumbingVertex { id: map[&v.id], ..*v });
        }
        out.edges.extend(other.edges.iter().map(|&(a, b)| (map[&a], map[&b])));
        out.legs.extend(other.legs.iter().map(|l| map[l]));
        out.next_id = offset + other.next_id;
        (out, map)
    }

    /// Connected components as lists of vertex ids, in vertex order.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertices.len();
        let index: BTreeMap<VertexId, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v.id, i)).collect();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, index[&a]), find(&mut parent, index[&b]));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        let mut order = Vec::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            if !groups.contains_key(&r) {
                order.push(r);
            }
            groups.entry(r).or_default().push(self.vertices[i].id);
        }
        order.into_iter().map(|r| groups.remove(&r).unwrap()).collect()
    }

    /// The subgraph induced on `ids` (legs included), keeping ids.
    pub fn induced(&self, ids: &[VertexId]) -> PlumbingGraph {
        let keep = |x: &VertexId| ids.contains(x);
        PlumbingGraph {
            vertices: self.vertices.iter().filter(|v| keep(&v.id)).copied().collect(),
            edges: self.edges.iter().filter(|(a, b)| keep(a) && keep(b)).copied().collect(),
            legs: self.legs.iter().filter(|l| keep(l)).copied().collect(),
            next_id: self.next_id,
        }
    }

    /// Symmetric matrix with Euler weights on the diagonal and edge counts
    /// off the diagonal, indexed in vertex order. Legs are ignored.
    pub fn intersection_matrix(&self) -> IntMatrix {
        let n = self.vertices.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, v) in self.vertices.iter().enumerate() {
            m[(i, i)] = BigInt::from(v.euler_weight);
        }
        for &(a, b) in &self.edges {
            let (i, j) = (self.position(a).unwrap(), self.position(b).unwrap());
            m[(i, j)] += 1;
            m[(j, i)] += 1;
        }
        m
    }

    /// First Betti number of the underlying graph: |E| - |V| + #components.
    pub fn first_betti(&self) -> usize {
        self.edges.len() + self.components().len() - self.vertices.len()
    }

    pub fn total_genus(&self) -> u64 {
        self.vertices.iter().map(|v| u64::from(v.genus)).sum()
    }

    pub fn shape(&self) -> Result<Shape> {
        if !self.legs.is_empty() {
            return Err(Error::BoundaryLegs(self.legs.len()));
        }
        let comps = self.components().len();
        if comps != 1 {
            return Err(Error::Disconnected(comps));
        }
        let n = self.vertices.len();
        let degrees: Vec<usize> = self.vertices.iter().map(|v| self.degree(v.id)).collect();
        let all_genus_zero = self.vertices.iter().all(|v| v.genus == 0);

        if self.edges.len() + 1 == n {
            if all_genus_zero && degrees.iter().all(|&d| d <= 2) {
                return Ok(Shape::Bamboo);
            }
            let hubs: Vec<usize> = (0..n).filter(|&i| degrees[i] >= 3).collect();
            if let [hub] = hubs[..] {
                let legs_genus_zero = self.vertices.iter().enumerate().all(|(i, v)| i == hub || v.genus == 0);
                if legs_genus_zero {
                    return Ok(Shape::Star);
                }
            }
            return Ok(Shape::Other);
        }
        if self.edges.len() == n && n >= 2 && degrees.iter().all(|&d| d == 2) {
            return Ok(Shape::Circuit);
        }
        Ok(Shape::Other)
    }
}
