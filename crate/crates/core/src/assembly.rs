//! Assembling the boundary of the Milnor fiber: trunk pieces and vanishing
//! zones glued along boundary tori, each gluing drawn as a genus-0 bamboo.
//!
//! Gluing convention: `GluingData(α, β)` with `β = β0 + tα`, `0 <= β0 < α`,
//! inserts the bamboo of `α/(α - β0)` between the two anchor vertices and
//! adds `t` to the weight of the first anchor. `α = 1` inserts nothing.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::germ::{vanishing_zone, GermData};
use crate::plumbing::{PlumbingGraph, VertexId};
use crate::seifert::{inverse_mod, neg_cont_frac, SeifertData};

/// How the boundary torus behind a leg is framed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Section {
    /// Product section of a Seifert piece (`e` relative to it).
    Product,
    /// Meridian disc of a solid torus.
    Meridian,
    /// One side of a thickened torus.
    Collar,
}

/// A graph manifold with boundary: a plumbing graph whose legs are the
/// boundary tori, or a bare thickened torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedPiece {
    pub graph: PlumbingGraph,
    pub leg_sections: Vec<Section>,
}

impl BoundedPiece {
    pub fn new(graph: PlumbingGraph, leg_sections: Vec<Section>) -> Result<Self> {
        if leg_sections.len() != graph.legs().len() {
            return Err(Error::BoundaryLegs(graph.legs().len()));
        }
        if leg_sections.contains(&Section::Collar) {
            return Err(Error::IncompatibleSections("collar sections belong to the thickened torus only"));
        }
        Ok(BoundedPiece { graph, leg_sections })
    }

    /// Star graph of a Seifert piece with at least one boundary torus.
    pub fn from_seifert(s: &SeifertData) -> Result<Self> {
        if s.boundary_count == 0 {
            return Err(Error::BoundaryLegs(0));
        }
        let graph = s.star_graph()?;
        BoundedPiece::new(graph, vec![Section::Product; s.boundary_count as usize])
    }

    pub fn is_collar(&self) -> bool {
        self.leg_sections.contains(&Section::Collar)
    }

    pub fn leg_count(&self) -> usize {
        self.leg_sections.len()
    }

    /// The closed manifold, once every boundary torus is glued.
    pub fn into_closed(self) -> Result<PlumbingGraph> {
        match self.leg_count() {
            0 => Ok(self.graph),
            n => Err(Error::BoundaryLegs(n)),
        }
    }

    fn check_leg(&self, leg: usize) -> Result<()> {
        if leg < self.leg_count() {
            Ok(())
        } else {
            Err(Error::MissingLeg(leg))
        }
    }
}

/// Gluing matrix data `(α, β)` for a boundary torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingData {
    pub alpha: i64,
    pub beta: i64,
}

impl GluingData {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 1 {
            return Err(Error::Parameter { name: "alpha", value: alpha, reason: "must be at least 1" });
        }
        if alpha.gcd(&beta) != 1 {
            return Err(Error::Parameter { name: "beta", value: beta, reason: "must be coprime to alpha" });
        }
        Ok(GluingData { alpha, beta })
    }

    pub fn trivial() -> Self {
        GluingData { alpha: 1, beta: 0 }
    }

    fn reduced(&self) -> i64 {
        self.beta.rem_euclid(self.alpha)
    }

    /// `t` in `β = β0 + tα`.
    pub fn shift(&self) -> i64 {
        self.beta.div_euclid(self.alpha)
    }

    /// Weights of the inserted bamboo, from the first anchor to the second.
    pub fn chain(&self) -> Vec<i64> {
        if self.alpha == 1 {
            return Vec::new();
        }
        neg_cont_frac(self.alpha, self.alpha - self.reduced())
            .expect("coprime gluing data")
            .into_iter()
            .map(|c| -c)
            .collect()
    }

    /// Data giving the same manifold with the two sides exchanged. Exists
    /// when the first anchor receives no shift.
    pub fn dual(&self) -> Option<GluingData> {
        if self.shift() != 0 {
            return None;
        }
        if self.alpha == 1 {
            return Some(*self);
        }
        let q = inverse_mod(self.alpha - self.reduced(), self.alpha)?;
        Some(GluingData { alpha: self.alpha, beta: (self.alpha - q).rem_euclid(self.alpha) })
    }
}

fn insert_chain(graph: &mut PlumbingGraph, a: VertexId, b: VertexId, g: GluingData) -> Result<()> {
    let mut prev = a;
    for w in g.chain() {
        let v = graph.add_vertex(0, w);
        graph.add_edge(prev, v)?;
        prev = v;
    }
    graph.add_edge(prev, b)?;
    graph.shift_weight(a, g.shift())
}

/// Waldhausen's Q as a bounded star.
pub fn trunk_q() -> BoundedPiece {
    BoundedPiece::from_seifert(&SeifertData::q_manifold()).expect("Q has one boundary torus")
}

/// `T^2 x [0, 1]`: no vertices, two boundary tori. Gluing both boundary
/// tori of another piece through it closes a cycle.
pub fn trunk_thickened_torus() -> BoundedPiece {
    BoundedPiece { graph: PlumbingGraph::new(), leg_sections: vec![Section::Collar, Section::Collar] }
}

/// Solid torus: a single `-1` vertex with one leg.
pub fn trunk_solid_torus() -> BoundedPiece {
    let mut graph = PlumbingGraph::new();
    let v = graph.add_vertex(0, -1);
    graph.add_leg(v).expect("vertex exists");
    BoundedPiece { graph, leg_sections: vec![Section::Meridian] }
}

/// Glues leg `leg_a` of `a` to leg `leg_b` of `b`. Remaining legs keep their
/// order, those of `a` first. A thickened torus absorbs trivial gluings.
pub fn glue_with_bamboo(
    a: &BoundedPiece,
    leg_a: usize,
    b: &BoundedPiece,
    leg_b: usize,
    g: GluingData,
) -> Result<BoundedPiece> {
    a.check_leg(leg_a)?;
    b.check_leg(leg_b)?;
    match (a.is_collar(), b.is_collar()) {
        (true, _) | (_, true) if g != GluingData::trivial() => {
            Err(Error::IncompatibleSections("a thickened torus only takes trivial gluing; use glue_through"))
        }
        (true, _) => Ok(b.clone()),
        (false, true) => Ok(a.clone()),
        (false, false) => {
            let mut left = a.graph.clone();
            let anchor_a = left.remove_leg(leg_a)?;
            let mut right = b.graph.clone();
            let anchor_b = right.remove_leg(leg_b)?;
            let (mut graph, map) = left.disjoint_union(&right);
            insert_chain(&mut graph, anchor_a, map[&anchor_b], g)?;
            let mut leg_sections = a.leg_sections.clone();
            leg_sections.remove(leg_a);
            let mut rest = b.leg_sections.clone();
            rest.remove(leg_b);
            leg_sections.extend(rest);
            Ok(BoundedPiece { graph, leg_sections })
        }
    }
}

/// Glues two legs of the same piece to each other.
pub fn glue_self(a: &BoundedPiece, leg1: usize, leg2: usize, g: GluingData) -> Result<BoundedPiece> {
    a.check_leg(leg1)?;
    a.check_leg(leg2)?;
    if a.is_collar() {
        return Err(Error::IncompatibleSections("a thickened torus cannot be closed up into a plumbing"));
    }
    if leg1 == leg2 {
        return Err(Error::IncompatibleSections("a boundary torus cannot be glued to itself"));
    }
    let mut graph = a.graph.clone();
    let anchor1 = graph.legs()[leg1];
    let anchor2 = graph.legs()[leg2];
    graph.remove_leg(leg1.max(leg2))?;
    graph.remove_leg(leg1.min(leg2))?;
    insert_chain(&mut graph, anchor1, anchor2, g)?;
    let leg_sections = a
        .leg_sections
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != leg1 && i != leg2)
        .map(|(_, s)| *s)
        .collect();
    Ok(BoundedPiece { graph, leg_sections })
}

/// Glues legs `leg1` and `leg2` of `a` to the two sides of a thickened torus.
pub fn glue_through(
    a: &BoundedPiece,
    leg1: usize,
    leg2: usize,
    collar: &BoundedPiece,
    g: GluingData,
) -> Result<BoundedPiece> {
    if !collar.is_collar() {
        return Err(Error::IncompatibleSections("glue_through needs a thickened torus"));
    }
    glue_self(a, leg1, leg2, g)
}

/// Closed plumbing graph of the boundary of the Milnor fiber of
/// `z^2 - (x^2 - y^3) y^l`: the vanishing zone glued with `(l+3, 1)` to Q
/// (one boundary torus) or through a thickened torus (two).
pub fn boundary_graph_example_family(l: i64) -> Result<PlumbingGraph> {
    let germ = GermData::example_family(l)?;
    let zone = BoundedPiece::from_seifert(&vanishing_zone(&germ, 0)?.seifert)?;
    let g = GluingData::new(l + 3, 1)?;
    let closed = match zone.leg_count() {
        1 => glue_with_bamboo(&trunk_q(), 0, &zone, 0, g)?,
        2 => glue_through(&zone, 0, 1, &trunk_thickened_torus(), g)?,
        n => return Err(Error::BoundaryLegs(n)),
    };
    closed.into_closed()
}

/// Closed plumbing graph for `z^2 - x y^l`: the vanishing zone capped by a
/// solid torus.
pub fn lens_family_graph(l: i64) -> Result<PlumbingGraph> {
    let germ = GermData::lens_family(l)?;
    let zone = BoundedPiece::from_seifert(&vanishing_zone(&germ, 0)?.seifert)?;
    glue_with_bamboo(&zone, 0, &trunk_solid_torus(), 0, GluingData::new(1, 1)?)?.into_closed()
}

fn odd_shape(l: i64, near_leaf: i64, far_leaf: i64) -> PlumbingGraph {
    let mut g = PlumbingGraph::bamboo(&vec![-2; (l + 4) as usize]);
    let ids: Vec<VertexId> = g.vertices().iter().map(|v| v.id).collect();
    let (first, last) = (ids[0], ids[ids.len() - 1]);
    for _ in 0..2 {
        let leaf = g.add_vertex(0, -2);
        g.add_edge(first, leaf).expect("fresh vertex");
        let mid = g.add_vertex(0, near_leaf);
        let end = g.add_vertex(0, far_leaf);
        g.add_edge(last, mid).expect("fresh vertex");
        g.add_edge(mid, end).expect("fresh vertex");
    }
    g
}

fn even_shape(l: i64, leaf: i64) -> PlumbingGraph {
    let mut g = PlumbingGraph::circuit(&vec![-2; (l + 3) as usize]).expect("at least two vertices");
    let node = g.vertices()[0].id;
    for _ in 0..2 {
        let v = g.add_vertex(0, leaf);
        g.add_edge(node, v).expect("fresh vertex");
    }
    g
}

fn odd_parameter(l: i64) -> Result<i64> {
    if l < 3 || l % 2 == 0 {
        return Err(Error::Parameter { name: "l", value: l, reason: "must be odd and at least 3" });
    }
    Ok((l - 1) / 2)
}

fn even_parameter(l: i64) -> Result<i64> {
    if l < 2 || l % 2 == 1 {
        return Err(Error::Parameter { name: "l", value: l, reason: "must be even and at least 2" });
    }
    Ok(l / 2)
}

/// Odd `l = 2h + 1`: a bamboo of `l + 4` vertices of weight `-2`, two `-2`
/// leaves at one end and two legs `[-2, -(h+1)]` at the other.
pub fn expected_graph_odd(l: i64) -> Result<PlumbingGraph> {
    let h = odd_parameter(l)?;
    Ok(odd_shape(l, -2, -(h + 1)))
}

/// Even `l = 2h`: a circuit of `l + 3` vertices of weight `-2`, with two
/// leaves of weight `-h` at one vertex.
pub fn expected_graph_even(l: i64) -> Result<PlumbingGraph> {
    let h = even_parameter(l)?;
    Ok(even_shape(l, -h))
}

/// The odd graph with leg ends of weight `-h` as often drawn in the
/// literature. Its homology is `Z/4(l-2)`, not `Z/4l`.
pub fn printed_graph_odd(l: i64) -> Result<PlumbingGraph> {
    let h = odd_parameter(l)?;
    Ok(odd_shape(l, -2, -h))
}

/// The even graph with leaves of weight `-h-1` as often drawn. For `l = 2`
/// its torsion has order 20, not `l(l+3) = 10`.
pub fn printed_graph_even(l: i64) -> Result<PlumbingGraph> {
    let h = even_parameter(l)?;
    Ok(even_shape(l, -h - 1))
}
