//! Seifert invariants, the rational Euler number, mapping tori of periodic
//! surface diffeomorphisms, and star-shaped plumbing graphs.
//!
//! Conventions, fixed once so that the assembled example graphs come out
//! right:
//! * an exceptional leaf whose neighborhood is the mapping torus of a
//!   rotation by `2π β*/α` gets the pair `(α, β)` with `β β* ≡ 1 (mod α)`,
//!   `0 < β < α`;
//! * in a star graph the leg of `(α, β)` is the bamboo of `α/(α-β)` and the
//!   central vertex has weight `e - #pairs`, so the orbifold Euler number of
//!   the star equals `e0 = e - Σ β/α`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::plumbing::PlumbingGraph;

/// Seifert invariant of one marked leaf.
///
/// `alpha >= 2` for exceptional leaves. A marked regular leaf has
/// `alpha = 1, beta = beta_star = 0`; these come from fixed points of the
/// identity and plumb to a `-1` leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeifertPair {
    pub alpha: i64,
    pub beta: i64,
    pub beta_star: i64,
}

impl SeifertPair {
    /// Pair of a leaf whose neighborhood is the mapping torus of a rotation
    /// by `2π·rotation_class/alpha`.
    pub fn normalize(alpha: i64, rotation_class: i64) -> Result<Self> {
        let fail = |reason| Err(Error::SeifertPair { alpha, class: rotation_class, reason });
        if alpha < 2 {
            return fail("alpha must be at least 2");
        }
        let beta_star = rotation_class.rem_euclid(alpha);
        if beta_star == 0 {
            return fail("rotation class is divisible by alpha");
        }
        let Some(beta) = inverse_mod(beta_star, alpha) else {
            return fail("rotation class is not coprime to alpha");
        };
        Ok(SeifertPair { alpha, beta, beta_star })
    }

    /// A pair with an unnormalized `beta`, as read from input.
    pub fn from_unnormalized(alpha: i64, beta: i64) -> Result<Self> {
        if alpha == 1 {
            return Ok(SeifertPair { alpha, beta, beta_star: 0 });
        }
        let Some(beta_star) = (alpha >= 2).then(|| inverse_mod(beta, alpha)).flatten() else {
            return Err(Error::SeifertPair { alpha, class: beta, reason: "need alpha >= 1 and gcd(alpha, beta) = 1" });
        };
        Ok(SeifertPair { alpha, beta, beta_star })
    }

    pub fn regular() -> Self {
        SeifertPair { alpha: 1, beta: 0, beta_star: 0 }
    }

    pub fn is_exceptional(&self) -> bool {
        self.alpha >= 2
    }

    /// Genus-0 leg weights, read outward from the central vertex.
    pub fn leg_weights(&self) -> Vec<i64> {
        let beta0 = self.beta.rem_euclid(self.alpha);
        if self.alpha == 1 {
            return vec![-1];
        }
        neg_cont_frac(self.alpha, self.alpha - beta0)
            .expect("coprime pair")
            .into_iter()
            .map(|c| -c)
            .collect()
    }
}

/// `b^{-1} mod n` in `(0, n)`, if it exists.
pub fn inverse_mod(b: i64, n: i64) -> Option<i64> {
    let ext = b.rem_euclid(n).extended_gcd(&n);
    (ext.gcd == 1).then(|| ext.x.rem_euclid(n))
}

/// Seifert invariants of an oriented Seifert manifold. `e` is present for
/// closed manifolds, and for bounded ones once boundary sections are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    pub base_genus: u32,
    pub boundary_count: u32,
    pub pairs: Vec<SeifertPair>,
    pub e: Option<i64>,
}

impl SeifertData {
    /// Waldhausen's Q: the mapping torus of the involution of the annulus.
    pub fn q_manifold() -> Self {
        let p = SeifertPair::normalize(2, 1).unwrap();
        SeifertData { base_genus: 0, boundary_count: 1, pairs: vec![p, p], e: Some(0) }
    }

    pub fn exceptional_pairs(&self) -> impl Iterator<Item = &SeifertPair> {
        self.pairs.iter().filter(|p| p.is_exceptional())
    }

    /// `e0 = e - Σ β/α`, exact.
    pub fn e0(&self) -> Result<BigRational> {
        let e = self.e.ok_or(Error::MissingEuler)?;
        let sum = self
            .pairs
            .iter()
            .fold(BigRational::zero(), |acc, p| acc + BigRational::new(p.beta.into(), p.alpha.into()));
        Ok(BigRational::from_integer(BigInt::from(e)) - sum)
    }

    /// Star-shaped plumbing graph. Boundary components become legs on the
    /// central vertex.
    pub fn star_graph(&self) -> Result<PlumbingGraph> {
        let e = self.e.ok_or(Error::MissingEuler)?;
        let mut g = PlumbingGraph::new();
        let center = g.add_vertex(self.base_genus, e - self.pairs.len() as i64);
        for pair in &self.pairs {
            let mut prev = center;
            for w in pair.leg_weights() {
                let v = g.add_vertex(0, w);
                g.add_edge(prev, v)?;
                prev = v;
            }
        }
        for _ in 0..self.boundary_count {
            g.add_leg(center)?;
        }
        Ok(g)
    }
}

#[derive(Serialize, Deserialize)]
struct SeifertJson {
    g: u32,
    r: u32,
    pairs: Vec<[i64; 2]>,
    e: Option<i64>,
}

impl Serialize for SeifertData {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeifertJson {
            g: self.base_genus,
            r: self.boundary_count,
            pairs: self.pairs.iter().map(|p| [p.alpha, p.beta]).collect(),
            e: self.e,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SeifertData {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SeifertJson::deserialize(d)?;
        let pairs = j
            .pairs
            .iter()
            .map(|&[a, b]| SeifertPair::from_unnormalized(a, b))
            .collect::<Result<_>>()
            .map_err(serde::de::Error::custom)?;
        Ok(SeifertData { base_genus: j.g, boundary_count: j.r, pairs, e: j.e })
    }
}

/// Action of the monodromy on one orbit of fiber boundary circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryOrbit {
    /// Number of circles in the orbit.
    pub size: u32,
    /// The first return `h^size` rotates each circle of the orbit by
    /// `rotation_num / rotation_den` of a turn (reduced, `0 <= num < den`).
    pub rotation_num: i64,
    pub rotation_den: i64,
}

/// A finite-order orientation-preserving surface diffeomorphism, described
/// by its fiber and its fixed-point and boundary data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyData {
    pub fiber_euler_char: i64,
    pub fiber_boundary_circles: u32,
    pub order: i64,
    /// Rotation classes mod `order` at the fixed points (angle `2π·class/order`).
    pub fixed_points: Vec<i64>,
    pub boundary_orbits: Vec<BoundaryOrbit>,
}

impl MonodromyData {
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if n < 1 {
            return Err(Error::Monodromy(format!("order {n} must be positive")));
        }
        for &c in &self.fixed_points {
            if c.gcd(&n) != 1 {
                return Err(Error::Monodromy(format!("rotation class {c} is not coprime to order {n}")));
            }
        }
        let circles: u32 = self.boundary_orbits.iter().map(|o| o.size).sum();
        if circles != self.fiber_boundary_circles {
            return Err(Error::Monodromy(format!(
                "boundary orbits cover {circles} circles, fiber has {}",
                self.fiber_boundary_circles
            )));
        }
        if let Some(o) = self.boundary_orbits.iter().find(|o| o.size == 0 || n % i64::from(o.size) != 0) {
            return Err(Error::Monodromy(format!("orbit size {} does not divide order {n}", o.size)));
        }
        quotient_euler_char(self.fiber_euler_char, n, self.fixed_points.len() as i64).map(|_| ())
    }
}

/// Euler characteristic of the orbit surface of a Z/N action whose only
/// non-free points are `fixed_count` fixed points.
pub fn quotient_euler_char(chi_fiber: i64, order: i64, fixed_count: i64) -> Result<i64> {
    if order < 1 || fixed_count < 0 {
        return Err(Error::Monodromy(format!("order {order} and fixed count {fixed_count} must be positive")));
    }
    let total = chi_fiber + fixed_count * (order - 1);
    if total % order != 0 {
        return Err(Error::Monodromy(format!(
            "Riemann-Hurwitz fails: {chi_fiber} + {fixed_count}*({order}-1) is not divisible by {order}"
        )));
    }
    Ok(total / order)
}

/// Seifert invariants of the mapping torus, with leaves the orbits of the
/// suspension flow.
///
/// For a closed fiber `e` is the unique value with `e0 = 0`; the data must
/// satisfy `Σ β ≡ 0 (mod N)` to be realizable. With boundary, `e = 0`
/// relative to the product sections.
pub fn mapping_torus_seifert(m: &MonodromyData) -> Result<SeifertData> {
    m.validate()?;
    let chi_q = quotient_euler_char(m.fiber_euler_char, m.order, m.fixed_points.len() as i64)?;
    let r = m.boundary_orbits.len() as i64;
    let twice_genus = 2 - r - chi_q;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::Monodromy(format!(
            "orbit surface with Euler characteristic {chi_q} and {r} boundary circles has no integral genus"
        )));
    }
    let pairs = m
        .fixed_points
        .iter()
        .map(|&c| if m.order == 1 { Ok(SeifertPair::regular()) } else { SeifertPair::normalize(m.order, c) })
        .collect::<Result<Vec<_>>>()?;
    let e = if r == 0 {
        let sum: i64 = pairs.iter().map(|p| p.beta).sum();
        if sum % m.order != 0 {
            return Err(Error::Monodromy(format!(
                "fixed-point data is not realizable: sum of betas {sum} is not divisible by {}",
                m.order
            )));
        }
        sum / m.order
    } else {
        0
    };
    Ok(SeifertData { base_genus: (twice_genus / 2) as u32, boundary_count: r as u32, pairs, e: Some(e) })
}

/// Negative continued fraction `n/q = e1 - 1/(e2 - 1/(... - 1/ek))` with
/// every `ei >= 2`.
pub fn neg_cont_frac(n: i64, q: i64) -> Result<Vec<i64>> {
    let fail = |reason| Err(Error::ContinuedFraction { n, q, reason });
    if !(n > q && q >= 1) {
        return fail("need n > q >= 1");
    }
    if n.gcd(&q) != 1 {
        return fail("n and q are not coprime");
    }
    let (mut a, mut b) = (n, q);
    let mut out = Vec::new();
    while b != 0 {
        let c = (a + b - 1) / b;
        out.push(c);
        (a, b) = (b, c * b - a);
    }
    Ok(out)
}

/// Exact value of `[e1, ..., ek]`; `None` if a partial denominator vanishes.
pub fn eval_neg_cont_frac(entries: &[i64]) -> Option<BigRational> {
    let mut acc: Option<BigRational> = None;
    for &c in entries.iter().rev() {
        let c = BigRational::from_integer(c.into());
        acc = Some(match acc {
            None => c,
            Some(x) if x.is_zero() => return None,
            Some(x) => c - x.recip(),
        });
    }
    acc
}
