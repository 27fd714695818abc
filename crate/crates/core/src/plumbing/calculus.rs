//! The part of the plumbing calculus needed to recognize generalized lens
//! spaces: ±1 blow-downs and blow-ups, absorption of 0-weighted vertices,
//! and evaluation of bamboos by negative continued fractions.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{PlumbingGraph, VertexId};
use crate::error::{Error, Result};

/// A generalized lens space: L(n, q), S^3 or S^1 x S^2.
///
/// `q` is reported as the smaller of `q` and its inverse mod `n`, which are
/// the two values describing the same oriented manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LensParams {
    Lens { n: i64, q: i64 },
    Sphere3,
    S1xS2,
}

impl LensParams {
    /// Oriented lens space from the fraction n/q of a bamboo.
    pub fn from_fraction(n: i64, q: i64) -> Option<Self> {
        let (n, q) = if n < 0 { (-n, -q) } else { (n, q) };
        match n {
            0 => (q.abs() == 1).then_some(LensParams::S1xS2),
            1 => Some(LensParams::Sphere3),
            _ => {
                let q = q.rem_euclid(n);
                let ext = q.extended_gcd(&n);
                if ext.gcd != 1 {
                    return None;
                }
                let inv = ext.x.rem_euclid(n);
                Some(LensParams::Lens { n, q: q.min(inv) })
            }
        }
    }

    /// Order of the first homology group; zero for S^1 x S^2.
    pub fn homology_order(&self) -> i64 {
        match *self {
            LensParams::Lens { n, .. } => n,
            LensParams::Sphere3 => 1,
            LensParams::S1xS2 => 0,
        }
    }
}

impl std::fmt::Display for LensParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LensParams::Lens { n, q } => write!(f, "L({n}, {q})"),
            LensParams::Sphere3 => write!(f, "S^3"),
            LensParams::S1xS2 => write!(f, "S^1 x S^2"),
        }
    }
}

impl PlumbingGraph {
    /// Blows down a genus-0 vertex of weight ±1 with degree at most 2 and no legs.
    ///
    /// Each neighbor's weight changes by `-weight(v)`; for degree 2 the two
    /// neighbors become adjacent. A +1 vertex lying on a cycle is refused,
    /// since the blow-down would need a negative edge.
    pub fn blow_down(&self, v: VertexId) -> Result<PlumbingGraph> {
        let vert = *self.vertex(v).ok_or(Error::UnknownVertex(v))?;
        let fail = |reason| Err(Error::BlowDown { id: v, reason });
        if vert.genus != 0 {
            return fail("genus is not zero");
        }
        if vert.euler_weight.abs() != 1 {
            return fail("Euler weight is not +1 or -1");
        }
        if self.legs_at(v) > 0 {
            return fail("vertex carries a boundary leg");
        }
        let nbrs = self.neighbors(v);
        if nbrs.len() > 2 {
            return fail("degree exceeds 2");
        }
        let eps = vert.euler_weight;
        let mut out = self.clone();
        out.remove_vertex(v)?;
        for &w in &nbrs {
            out.shift_weight(w, -eps)?;
        }
        if let [a, b] = nbrs[..] {
            if a == b {
                return fail("both edges go to the same neighbor, the result would have a loop");
            }
            if eps == 1 && out.connected(a, b) {
                return fail("+1 vertex on a cycle would need a negative edge");
            }
            out.add_edge(a, b)?;
        }
        Ok(out)
    }

    /// Attaches a new ±1 leaf to `v`, shifting `v` by the same sign. Inverse of
    /// blowing down that leaf. Returns the new graph and the new vertex id.
    pub fn blow_up_leaf(&self, v: VertexId, sign: i64) -> Result<(PlumbingGraph, VertexId)> {
        check_sign(sign)?;
        let mut out = self.clone();
        out.shift_weight(v, sign)?;
        let new = out.add_vertex(0, sign);
        out.add_edge(v, new)?;
        Ok((out, new))
    }

    /// Subdivides one edge `a`–`b` by a new ±1 vertex, shifting both endpoints
    /// by the same sign. A +1 subdivision of an edge on a cycle is refused.
    pub fn blow_up_edge(&self, a: VertexId, b: VertexId, sign: i64) -> Result<(PlumbingGraph, VertexId)> {
        check_sign(sign)?;
        let mut out = self.clone();
        if !out.remove_edge(a, b) {
            return Err(Error::BlowUp("no such edge"));
        }
        if sign == 1 && out.connected(a, b) {
            return Err(Error::BlowUp("+1 subdivision of an edge on a cycle"));
        }
        out.shift_weight(a, sign)?;
        out.shift_weight(b, sign)?;
        let new = out.add_vertex(0, sign);
        out.add_edge(a, new)?;
        out.add_edge(new, b)?;
        Ok((out, new))
    }

    /// Adds an isolated ±1 vertex (connected sum with S^3).
    pub fn blow_up_isolated(&self, sign: i64) -> Result<(PlumbingGraph, VertexId)> {
        check_sign(sign)?;
        let mut out = self.clone();
        let new = out.add_vertex(0, sign);
        Ok((out, new))
    }

    pub(crate) fn connected(&self, a: VertexId, b: VertexId) -> bool {
        self.components().iter().any(|c| c.contains(&a) && c.contains(&b))
    }

    /// Decides whether a closed graph describes a generalized lens space, and
    /// which one. Components are summed; `S^3` summands drop out.
    ///
    /// Returns `None` when a positive-genus vertex or a cycle is present, when
    /// a vertex of degree three or more survives the reductions, or when two
    /// nontrivial summands remain.
    pub fn recognize_generalized_lens(&self) -> Result<Option<LensParams>> {
        if !self.legs.is_empty() {
            return Err(Error::BoundaryLegs(self.legs.len()));
        }
        if self.vertices.iter().any(|v| v.genus > 0) || self.first_betti() > 0 {
            return Ok(None);
        }
        let reduced = self.reduce_tree();
        let mut result = LensParams::Sphere3;
        for comp in reduced.components() {
            let Some(lens) = reduced.induced(&comp).evaluate_bamboo() else {
                return Ok(None);
            };
            match (result, lens) {
                (_, LensParams::Sphere3) => {}
                (LensParams::Sphere3, other) => result = other,
                // A connected sum of two nontrivial summands is not a generalized lens space.
                _ => return Ok(None),
            }
        }
        Ok(Some(result))
    }

    /// Applies ±1 blow-downs and 0-weight absorptions until none applies.
    /// Genus-0 trees only.
    fn reduce_tree(&self) -> PlumbingGraph {
        let mut g = self.clone();
        'outer: loop {
            for v in g.vertices.clone() {
                let deg = g.degree(v.id);
                match v.euler_weight {
                    1 | -1 if deg <= 2 => {
                        if let Ok(next) = g.blow_down(v.id) {
                            g = next;
                            continue 'outer;
                        }
                    }
                    0 if deg == 2 => {
                        let nbrs = g.neighbors(v.id);
                        g.absorb_zero_chain(v.id, nbrs[0], nbrs[1]);
                        continue 'outer;
                    }
                    0 if deg == 1 => {
                        // A 0-leaf cancels its neighbor; the other branches split off.
                        let u = g.neighbors(v.id)[0];
                        g.remove_vertex(v.id).unwrap();
                        g.remove_vertex(u).unwrap();
                        continue 'outer;
                    }
                    _ => {}
                }
            }
            return g;
        }
    }

    /// Removes a 0-weighted degree-2 vertex and merges its two neighbors into
    /// one vertex carrying the sum of their weights.
    fn absorb_zero_chain(&mut self, v: VertexId, a: VertexId, b: VertexId) {
        self.remove_vertex(v).unwrap();
        let vb = self.remove_vertex_keep_edges(b);
        let va = self.vertex_mut(a).unwrap();
        va.euler_weight += vb.euler_weight;
        va.genus += vb.genus;
        for e in self.edges.iter_mut() {
            if e.0 == b {
                e.0 = a;
            }
            if e.1 == b {
                e.1 = a;
            }
        }
        for l in self.legs.iter_mut() {
            if *l == b {
                *l = a;
            }
        }
    }

    fn remove_vertex_keep_edges(&mut self, id: VertexId) -> super::PlumbingVertex {
        let pos = self.position(id).unwrap();
        self.vertices.remove(pos)
    }

    /// Evaluates a genus-0 path as n/q = [c1, ..., ck] with c_i = -weight,
    /// using the 2x2 matrix product so zero partial quotients are harmless.
    /// Returns `None` if the graph is not a path.
    fn evaluate_bamboo(&self) -> Option<LensParams> {
        if self.vertices.is_empty() {
            return Some(LensParams::Sphere3);
        }
        if self.first_betti() > 0 || self.vertices.iter().any(|v| self.degree(v.id) > 2) {
            return None;
        }
        let start = self.vertices.iter().find(|v| self.degree(v.id) <= 1)?.id;
        let mut order = vec![start];
        let mut prev = None;
        let mut cur = start;
        while let Some(next) = self.neighbors(cur).into_iter().find(|&w| Some(w) != prev) {
            order.push(next);
            prev = Some(cur);
            cur = next;
        }
        // [[p, -r], [q, -s]] accumulates the product of [[c, -1], [1, 0]].
        let (mut p, mut r, mut q, mut s) = (1i64, 0i64, 0i64, -1i64);
        for id in order {
            let c = -self.vertex(id).unwrap().euler_weight;
            let (np, nr) = (p * c - r, p);
            let (nq, ns) = (q * c - s, q);
            (p, r, q, s) = (np, nr, nq, ns);
        }
        LensParams::from_fraction(p, q)
    }
}

fn check_sign(sign: i64) -> Result<()> {
    if sign.abs() == 1 {
        Ok(())
    } else {
        Err(Error::BlowUp("blow-up vertices have weight +1 or -1"))
    }
}
