//! First homology of closed plumbed 3-manifolds, and closed forms for the
//! Hirzebruch family and the `z^2 - (x^2 - y^3) y^l` family.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::assembly::expected_graph_even;
use crate::error::{Error, Result};
use crate::linalg::{nullity, smith_normal_form};
use crate::plumbing::PlumbingGraph;

/// `Z^free_rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk` with `1 < t1 | t2 | ... | tk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyResult {
    /// Builds the canonical form from arbitrary cyclic factors.
    pub fn from_factors(free_rank: usize, factors: &[BigInt]) -> Self {
        HomologyResult { free_rank, torsion: invariant_factors(factors) }
    }

    pub fn cyclic(order: i64) -> Self {
        Self::from_factors(0, &[BigInt::from(order)])
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Invariant factors of `⊕ Z/a_i`, dropping trivial ones. Zero factors are ignored.
pub fn invariant_factors(factors: &[BigInt]) -> Vec<BigInt> {
    // Merge prime-power parts: the i-th largest power of each prime goes into
    // the i-th largest factor.
    let mut out: Vec<BigInt> = Vec::new();
    for a in factors.iter().map(|a| a.abs()).filter(|a| *a > BigInt::one()) {
        let mut carry = a;
        for slot in out.iter_mut().rev() {
            let g = slot.gcd(&carry);
            let l = slot.lcm(&carry);
            *slot = l;
            carry = g;
            if carry.is_one() {
                break;
            }
        }
        if !carry.is_one() {
            out.insert(0, carry);
        }
    }
    out
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct HomologyJson {
    free_rank: usize,
    torsion: Vec<serde_json::Value>,
}

impl Serialize for HomologyResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let torsion = self
            .torsion
            .iter()
            .map(|t| match t.to_u64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(t.to_string()),
            })
            .collect();
        HomologyJson { free_rank: self.free_rank, torsion }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomologyResult {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = HomologyJson::deserialize(d)?;
        let factors = j
            .torsion
            .iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|e| e.to_string()),
                serde_json::Value::String(s) => s.parse::<BigInt>().map_err(|e| e.to_string()),
                other => Err(format!("torsion factor {other} is not an integer")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(HomologyResult::from_factors(j.free_rank, &factors))
    }
}

/// `H_1` of a closed plumbed manifold: free part `2Σg + b1(Γ) + nullity(A)`,
/// torsion the nontrivial invariant factors of the intersection matrix `A`.
pub fn h1_of_plumbed(g: &PlumbingGraph) -> Result<HomologyResult> {
    if !g.is_closed() {
        return Err(Error::BoundaryLegs(g.legs().len()));
    }
    let a = g.intersection_matrix();
    let snf = smith_normal_form(&a);
    let free_rank = 2 * g.total_genus() as usize + g.first_betti() + nullity(&a);
    Ok(HomologyResult { free_rank, torsion: snf.torsion() })
}

/// Closed form for the boundary of the Milnor fiber of `z^m - x^k y^l`.
pub fn hirzebruch_h1(m: i64, k: i64, l: i64) -> Result<HomologyResult> {
    if m < 2 {
        return Err(Error::Parameter { name: "m", value: m, reason: "must be at least 2" });
    }
    if k < 1 {
        return Err(Error::Parameter { name: "k", value: k, reason: "must be at least 1" });
    }
    if l <= k {
        return Err(Error::Parameter { name: "l", value: l, reason: "must exceed k" });
    }
    if m.gcd(&k).gcd(&l) != 1 {
        return Err(Error::Parameter { name: "m", value: m, reason: "gcd(m, k, l) must be 1" });
    }
    let d = k.gcd(&l);
    let kl = BigInt::from(k / d) * BigInt::from(l / d);
    let free_rank = (2 * (m - 1) * (d - 1)) as usize;
    let mut torsion = vec![kl.clone(); (m - 2) as usize];
    torsion.push(kl * m);
    Ok(HomologyResult { free_rank, torsion: torsion.into_iter().filter(|t| !t.is_one()).collect() })
}

/// Closed form for the boundary of the Milnor fiber of `z^2 - (x^2 - y^3) y^l`.
/// For even `l` only the order `l(l+3)` is known in closed form; the factor
/// structure is read off the graph.
pub fn example_family_h1(l: i64) -> Result<HomologyResult> {
    if l < 2 {
        return Err(Error::Parameter { name: "l", value: l, reason: "must be at least 2" });
    }
    if l % 2 == 1 {
        return Ok(HomologyResult::cyclic(4 * l));
    }
    h1_of_plumbed(&expected_graph_even(l)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bamboo_a3() {
        let h = h1_of_plumbed(&PlumbingGraph::bamboo(&[-2, -2, -2])).unwrap();
        assert_eq!(h, HomologyResult { free_rank: 0, torsion: big(&[4]) });
        assert_eq!(h.to_string(), "Z/4");
    }

    #[test]
    fn simple_manifolds() {
        assert!(h1_of_plumbed(&PlumbingGraph::new()).unwrap().is_trivial());
        assert!(h1_of_plumbed(&PlumbingGraph::bamboo(&[-1])).unwrap().is_trivial());
        assert_eq!(h1_of_plumbed(&PlumbingGraph::bamboo(&[0])).unwrap().to_string(), "Z");
        let mut t = PlumbingGraph::new();
        t.add_vertex(1, 0);
        assert_eq!(h1_of_plumbed(&t).unwrap().to_string(), "Z^3");
        let mut t = PlumbingGraph::new();
        t.add_vertex(1, -3);
        assert_eq!(h1_of_plumbed(&t).unwrap().to_string(), "Z^2 ⊕ Z/3");
    }

    #[test]
    fn rejects_legs() {
        let mut g = PlumbingGraph::bamboo(&[-2]);
        let v = g.vertices()[0].id;
        g.add_leg(v).unwrap();
        assert_eq!(h1_of_plumbed(&g), Err(Error::BoundaryLegs(1)));
    }

    #[test]
    fn hirzebruch_values() {
        assert_eq!(hirzebruch_h1(2, 1, 5).unwrap().to_string(), "Z/10");
        assert_eq!(hirzebruch_h1(3, 1, 2).unwrap().to_string(), "Z/2 ⊕ Z/6");
        assert_eq!(hirzebruch_h1(3, 2, 4).unwrap().to_string(), "Z^4 ⊕ Z/2 ⊕ Z/6");
        assert_eq!(hirzebruch_h1(3, 1, 3).unwrap().to_string(), "Z/3 ⊕ Z/9");
        assert!(hirzebruch_h1(1, 1, 2).is_err());
        assert!(hirzebruch_h1(2, 0, 2).is_err());
        assert!(hirzebruch_h1(2, 3, 3).is_err());
        assert!(hirzebruch_h1(2, 2, 4).is_err());
    }

    #[test]
    fn example_family_closed_form() {
        assert_eq!(example_family_h1(3).unwrap().to_string(), "Z/12");
        assert_eq!(example_family_h1(5).unwrap().to_string(), "Z/20");
        let h = example_family_h1(2).unwrap();
        assert_eq!(h.free_rank, 1);
        assert_eq!(h.torsion_order(), BigInt::from(10));
        assert!(example_family_h1(1).is_err());
    }

    #[test]
    fn canonical_factors() {
        assert_eq!(invariant_factors(&big(&[6, 4])), big(&[2, 12]));
        assert_eq!(invariant_factors(&big(&[2, 3])), big(&[6]));
        assert_eq!(invariant_factors(&big(&[1, 1, 5])), big(&[5]));
        assert_eq!(invariant_factors(&big(&[2, 2, 4])), big(&[2, 2, 4]));
        assert_eq!(invariant_factors(&big(&[])), big(&[]));
    }

    #[test]
    fn json_roundtrip() {
        let h = hirzebruch_h1(3, 2, 4).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"free_rank":4,"torsion":[2,6]}"#);
        assert_eq!(serde_json::from_str::<HomologyResult>(&s).unwrap(), h);
    }
}
