//! Combinatorial model of `f = z^m - g(x, y)` with `g = Π g_i^{n_i}`
//! non-reduced, the vertical monodromy of each vanishing zone, and the
//! lens-space criterion.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seifert::{mapping_torus_seifert, BoundaryOrbit, MonodromyData, SeifertData, SeifertPair};

/// One irreducible factor `g_i` with exponent `n_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchData {
    #[serde(rename = "n")]
    pub multiplicity: i64,
    #[serde(rename = "mu")]
    pub milnor_number: i64,
}

/// Germ data: the exponent of `z`, the branches of `g`, and their pairwise
/// intersection multiplicities at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermData {
    pub m: i64,
    pub branches: Vec<BranchData>,
    /// Symmetric, zero diagonal.
    intersections: Vec<Vec<i64>>,
    /// Whether `f` is irreducible; derived from the exponents when absent.
    pub irreducible: Option<bool>,
}

#[derive(Serialize, Deserialize)]
struct GermJson {
    m: i64,
    branches: Vec<BranchData>,
    #[serde(default)]
    intersections: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    irreducible: Option<bool>,
}

impl GermData {
    /// Validates and builds germ data from `(i, j, m0)` triples. Each
    /// unordered pair of distinct branches must be listed (in either or both
    /// orders, consistently).
    pub fn new(m: i64, branches: Vec<BranchData>, triples: &[[i64; 3]]) -> Result<Self> {
        let bad = |msg: String| Err(Error::Germ(msg));
        if m < 2 {
            return bad(format!("m = {m}: exponent of z must be at least 2"));
        }
        for (i, b) in branches.iter().enumerate() {
            if b.multiplicity < 1 {
                return bad(format!("branches[{i}].n = {}: multiplicity must be at least 1", b.multiplicity));
            }
            if b.milnor_number < 0 {
                return bad(format!("branches[{i}].mu = {}: Milnor number must be non-negative", b.milnor_number));
            }
        }
        if branches.iter().all(|b| b.multiplicity == 1) {
            return bad("g is reduced: some branch needs multiplicity n >= 2".into());
        }
        let count = branches.len();
        let mut x = vec![vec![0i64; count]; count];
        for &[i, j, m0] in triples {
            let in_range = |v: i64| (0..count as i64).contains(&v);
            if !in_range(i) || !in_range(j) {
                return bad(format!("intersections entry [{i},{j},{m0}]: branch index out of range"));
            }
            if i == j {
                return bad(format!("intersections entry [{i},{j},{m0}]: diagonal entries are not allowed"));
            }
            if m0 < 1 {
                return bad(format!("intersections entry [{i},{j},{m0}]: multiplicity must be positive"));
            }
            let (i, j) = (i as usize, j as usize);
            if x[i][j] != 0 && x[i][j] != m0 {
                return bad(format!("intersections entries for ({i},{j}) disagree: {} vs {m0}", x[i][j]));
            }
            x[i][j] = m0;
            x[j][i] = m0;
        }
        for i in 0..count {
            for j in i + 1..count {
                if x[i][j] == 0 {
                    return bad(format!("intersections: missing entry for branches ({i},{j})"));
                }
            }
        }
        Ok(GermData { m, branches, intersections: x, irreducible: None })
    }

    pub fn with_irreducible(mut self, flag: bool) -> Self {
        self.irreducible = Some(flag);
        self
    }

    pub fn intersection(&self, i: usize, j: usize) -> i64 {
        self.intersections[i][j]
    }

    /// `z^m - Π g_i^{n_i}` is irreducible iff `gcd(m, n_1, ..., n_l) = 1`.
    pub fn derived_irreducible(&self) -> bool {
        self.branches.iter().fold(self.m, |acc, b| acc.gcd(&b.multiplicity)) == 1
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible.unwrap_or_else(|| self.derived_irreducible())
    }

    pub fn to_json(&self) -> String {
        let mut triples = Vec::new();
        for i in 0..self.branches.len() {
            for j in i + 1..self.branches.len() {
                triples.push([i as i64, j as i64, self.intersections[i][j]]);
            }
        }
        let j = GermJson { m: self.m, branches: self.branches.clone(), intersections: triples, irreducible: self.irreducible };
        serde_json::to_string_pretty(&j).expect("germ data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: GermJson = serde_json::from_str(s).map_err(|e| Error::Germ(e.to_string()))?;
        let g = GermData::new(j.m, j.branches, &j.intersections)?;
        Ok(GermData { irreducible: j.irreducible, ..g })
    }

    /// `z^2 - (x^2 - y^3) y^l`.
    pub fn example_family(l: i64) -> Result<Self> {
        if l < 2 {
            return Err(Error::Parameter { name: "l", value: l, reason: "must be at least 2" });
        }
        let branches = vec![
            BranchData { multiplicity: l, milnor_number: 0 },
            BranchData { multiplicity: 1, milnor_number: 2 },
        ];
        GermData::new(2, branches, &[[0, 1, 2]])
    }

    /// `z^2 - x y^l`.
    pub fn lens_family(l: i64) -> Result<Self> {
        if l < 2 {
            return Err(Error::Parameter { name: "l", value: l, reason: "must be at least 2" });
        }
        let branches = vec![
            BranchData { multiplicity: l, milnor_number: 0 },
            BranchData { multiplicity: 1, milnor_number: 0 },
        ];
        GermData::new(2, branches, &[[0, 1, 1]])
    }

    /// `z^m - y^n`, a single smooth branch.
    pub fn single_branch(m: i64, n: i64) -> Result<Self> {
        GermData::new(m, vec![BranchData { multiplicity: n, milnor_number: 0 }], &[])
    }
}

impl Serialize for GermData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: serde_json::Value = serde_json::from_str(&self.to_json()).map_err(serde::ser::Error::custom)?;
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GermData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GermJson::deserialize(d)?;
        let g = GermData::new(j.m, j.branches, &j.intersections).map_err(serde::de::Error::custom)?;
        Ok(GermData { irreducible: j.irreducible, ..g })
    }
}

/// Branches with multiplicity at least 2: the components of the singular locus.
pub fn singular_branches(g: &GermData) -> Vec<usize> {
    (0..g.branches.len()).filter(|&i| g.branches[i].multiplicity >= 2).collect()
}

/// Intersection multiplicity of `g_i` with `g'' = Π_{j≠i} g_j^{n_j}`.
pub fn k_of_branch(g: &GermData, i: usize) -> i64 {
    (0..g.branches.len())
        .filter(|&j| j != i)
        .map(|j| g.branches[j].multiplicity * g.intersections[i][j])
        .sum()
}

/// Euler characteristic, genus and number of boundary circles of a surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberInvariants {
    pub euler_char: i64,
    pub genus: i64,
    pub boundary: i64,
}

impl FiberInvariants {
    pub fn is_disc(&self) -> bool {
        self.euler_char == 1 && self.boundary == 1
    }
}

/// Milnor fiber of the plane curve `z^m - y^n`.
pub fn plane_fiber_invariants(m: i64, n: i64) -> FiberInvariants {
    let euler_char = 1 - (m - 1) * (n - 1);
    let boundary = m.gcd(&n);
    let twice = 2 - boundary - euler_char;
    assert!(twice >= 0 && twice % 2 == 0, "fiber of z^{m} - y^{n} has no integral genus");
    FiberInvariants { euler_char, genus: twice / 2, boundary }
}

/// Euler characteristic of a totally ramified cyclic cover of the given degree.
pub fn covering_euler_char(chi_base: i64, degree: i64, branch_values: i64) -> i64 {
    degree * chi_base - (degree - 1) * branch_values
}

/// Boundary circles of the fiber of `z^m - y^n` are indexed by `j mod b`,
/// `b = gcd(m, n)`, and the monodromy (rotation of `y` by `-2πk/n`, `z`
/// fixed) sends circle `j` to `j + k`.
fn boundary_orbits(m: i64, n: i64, k: i64) -> Vec<BoundaryOrbit> {
    let b = m.gcd(&n);
    let orbits = b.gcd(&k);
    let size = b / orbits;
    // On a circle the coordinate is arg(y) in R / (2π m/b). The return map
    // h^size moves it by 2π(w - k·size/n) where n·w ≡ k·size (mod m).
    let shift = k * size;
    let w = (0..m).find(|w| (n * w - shift).rem_euclid(m) == 0).expect("orbit closes");
    let u = (n * w - shift) / m;
    let num = (u * b).rem_euclid(n);
    let g = num.gcd(&n);
    let orbit = BoundaryOrbit { size: size as u32, rotation_num: num / g, rotation_den: n / g };
    vec![orbit; orbits as usize]
}

/// Vertical monodromy on the Milnor fiber of `z^m - y^{n_i}`.
pub fn vertical_monodromy(g: &GermData, i: usize) -> Result<MonodromyData> {
    let n = g.branches.get(i).ok_or_else(|| Error::Germ(format!("branch index {i} out of range")))?.multiplicity;
    if n < 2 {
        return Err(Error::Germ(format!("branch {i} has multiplicity {n}; no vanishing zone")));
    }
    monodromy_of(g.m, n, k_of_branch(g, i))
}

/// Vertical monodromy from the three integers it depends on.
pub fn monodromy_of(m: i64, n: i64, k: i64) -> Result<MonodromyData> {
    if m < 2 || n < 2 || k < 0 {
        return Err(Error::Monodromy(format!("need m >= 2, n >= 2, k >= 0; got m={m}, n={n}, k={k}")));
    }
    let fiber = plane_fiber_invariants(m, n);
    let d = n.gcd(&k);
    let order = n / d;
    let fixed_points = if order > 1 { vec![(-(k / d)).rem_euclid(order); m as usize] } else { vec![] };
    let data = MonodromyData {
        fiber_euler_char: fiber.euler_char,
        fiber_boundary_circles: fiber.boundary as u32,
        order,
        fixed_points,
        boundary_orbits: boundary_orbits(m, n, k),
    };
    data.validate()?;
    Ok(data)
}

/// The Seifert piece around one component of the singular locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingZoneData {
    pub branch_index: usize,
    pub k: i64,
    pub d: i64,
    pub fiber: FiberInvariants,
    pub monodromy: MonodromyData,
    pub seifert: SeifertData,
    /// The boundary permutation has been checked against worked examples
    /// only for `m = 2`.
    pub boundary_orbits_verified: bool,
}

impl VanishingZoneData {
    pub fn exceptional_pair_count(&self) -> usize {
        self.seifert.exceptional_pairs().count()
    }

    /// Seifert over a disc with at most one exceptional leaf.
    pub fn is_solid_torus(&self) -> bool {
        self.seifert.base_genus == 0 && self.seifert.boundary_count == 1 && self.exceptional_pair_count() <= 1
    }
}

/// Vanishing zone of branch `i`.
///
/// For identity monodromy the `m` points `y = 0` of the fiber are kept as
/// marked regular leaves (pairs `(1, 0)`); they plumb to `-1` leaves and do
/// not change the manifold.
pub fn vanishing_zone(g: &GermData, i: usize) -> Result<VanishingZoneData> {
    let monodromy = vertical_monodromy(g, i)?;
    let k = k_of_branch(g, i);
    Ok(zone_from(g.m, g.branches[i].multiplicity, k, i, monodromy))
}

/// Vanishing zone from `(m, n, k)` alone.
pub fn vanishing_zone_of(m: i64, n: i64, k: i64) -> Result<VanishingZoneData> {
    let monodromy = monodromy_of(m, n, k)?;
    Ok(zone_from(m, n, k, 0, monodromy))
}

fn zone_from(m: i64, n: i64, k: i64, branch_index: usize, monodromy: MonodromyData) -> VanishingZoneData {
    let mut seifert = mapping_torus_seifert(&monodromy).expect("vertical monodromy is realizable");
    if monodromy.order == 1 {
        seifert.pairs.extend(std::iter::repeat_n(SeifertPair::regular(), m as usize));
    }
    VanishingZoneData {
        branch_index,
        k,
        d: n.gcd(&k),
        fiber: plane_fiber_invariants(m, n),
        monodromy,
        seifert,
        boundary_orbits_verified: m == 2,
    }
}

/// Why the boundary of the Milnor fiber is not a lens space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LensObstruction {
    Reducible,
    ExponentAboveTwo,
    SingularLocusNotIrreducible,
    TrunkNotSolidTorus,
    IdentityMonodromy,
}

impl std::fmt::Display for LensObstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LensObstruction::Reducible => "f is reducible",
            LensObstruction::ExponentAboveTwo => {
                "m > 2: the vanishing zone has m exceptional leaves or a base of positive genus"
            }
            LensObstruction::SingularLocusNotIrreducible => "the singular locus is not an irreducible germ",
            LensObstruction::TrunkNotSolidTorus => "the trunk is not a solid torus",
            LensObstruction::IdentityMonodromy => "identity monodromy on positive-genus fiber",
        })
    }
}

/// `Ok(l)` when the boundary is the lens space `L(2l, 1)`, the obstruction otherwise.
pub fn is_lens_boundary(g: &GermData) -> std::result::Result<i64, LensObstruction> {
    if !g.is_irreducible() {
        return Err(LensObstruction::Reducible);
    }
    if g.m > 2 {
        return Err(LensObstruction::ExponentAboveTwo);
    }
    let [i] = singular_branches(g)[..] else {
        return Err(LensObstruction::SingularLocusNotIrreducible);
    };
    let k = k_of_branch(g, i);
    if k == 0 {
        return Err(LensObstruction::IdentityMonodromy);
    }
    if g.branches[i].milnor_number != 0 || k != 1 {
        return Err(LensObstruction::TrunkNotSolidTorus);
    }
    Ok(g.branches[i].multiplicity)
}
