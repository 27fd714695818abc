//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's linear algebra.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use plumbtop::{IntMatrix, PlumbingGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn to_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.to_i64().expect("small entry")).collect()).collect()
}

/// Intersection matrix built directly from vertex weights and edge lists.
pub fn raw_intersection(g: &PlumbingGraph) -> Vec<Vec<i64>> {
    let ids: Vec<_> = g.vertices().iter().map(|v| v.id).collect();
    let pos = |id| ids.iter().position(|&x| x == id).unwrap();
    let mut a = vec![vec![0i64; ids.len()]; ids.len()];
    for v in g.vertices() {
        a[pos(v.id)][pos(v.id)] = v.euler_weight;
    }
    for &(x, y) in g.edges() {
        a[pos(x)][pos(y)] += 1;
        a[pos(y)][pos(x)] += 1;
    }
    a
}

fn minor(a: &[Vec<i64>], row: usize, col: usize) -> Vec<Vec<i64>> {
    a.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, &x)| x).collect())
        .collect()
}

/// Laplace expansion along the first row.
pub fn laplace_det(a: &[Vec<i64>]) -> i128 {
    match a.len() {
        0 => 1,
        1 => a[0][0] as i128,
        n => (0..n)
            .filter(|&j| a[0][j] != 0)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[0][j] as i128 * laplace_det(&minor(a, 0, j))
            })
            .sum(),
    }
}

/// Classical adjugate by cofactors.
pub fn adjugate(a: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[j][i] = sign * laplace_det(&minor(a, i, j));
        }
    }
    adj
}

/// Elements of `Z^n / A Z^n` (nonsingular `A`) found by breadth-first search
/// from 0 along the standard generators. Returns (group order, exponent).
pub fn brute_force_cokernel(a: &[Vec<i64>]) -> (u64, u64) {
    let n = a.len();
    let det = laplace_det(a);
    assert!(det != 0);
    let adj = adjugate(a);
    // v lies in the column lattice iff adj·v ≡ 0 (mod det).
    let in_lattice = |v: &[i128]| {
        (0..n).all(|i| (0..n).map(|j| adj[i][j] * v[j]).sum::<i128>().rem_euclid(det.abs()) == 0)
    };
    let same = |x: &[i128], y: &[i128]| {
        let diff: Vec<i128> = x.iter().zip(y).map(|(p, q)| p - q).collect();
        in_lattice(&diff)
    };
    let mut seen: Vec<Vec<i128>> = vec![vec![0; n]];
    let mut frontier = 0;
    while frontier < seen.len() {
        let cur = seen[frontier].clone();
        frontier += 1;
        for i in 0..n {
            let mut next = cur.clone();
            next[i] += 1;
            if !seen.iter().any(|s| same(s, &next)) {
                seen.push(next);
            }
        }
    }
    let exponent = seen
        .iter()
        .map(|v| {
            let mut t = 1u64;
            while !in_lattice(&v.iter().map(|x| x * t as i128).collect::<Vec<_>>()) {
                t += 1;
            }
            t
        })
        .fold(1u64, |acc, t| acc.lcm(&t));
    (seen.len() as u64, exponent)
}

/// Pivots of a symmetric rational LDLᵀ factorization without pivoting;
/// `None` as soon as a zero pivot appears.
pub fn ldl_pivots(a: &[Vec<i64>]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> =
        a.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let p = m[k][k].clone();
        if p.is_zero() {
            return None;
        }
        for i in k + 1..n {
            let f = &m[i][k] / &p;
            for j in k..n {
                let v = &f * &m[k][j];
                m[i][j] -= v;
            }
        }
        pivots.push(p);
    }
    Some(pivots)
}

/// Negative definite iff every LDLᵀ pivot is negative.
pub fn negative_definite_by_ldl(a: &[Vec<i64>]) -> bool {
    ldl_pivots(a).is_some_and(|p| p.iter().all(|x| x.is_negative()))
}

/// Rank over Q by fraction-carrying Gaussian elimination.
pub fn rational_rank(a: &[Vec<i64>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigRational>> =
        a.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for j in c..cols {
                    let v = &f * &m[rank][j];
                    m[r][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `|E| - |V| + #components`, by union-find.
pub fn cycle_rank(g: &PlumbingGraph) -> usize {
    let ids: Vec<_> = g.vertices().iter().map(|v| v.id).collect();
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut cycles = 0;
    for &(a, b) in g.edges() {
        let ra = find(&mut parent, ids.iter().position(|&x| x == a).unwrap());
        let rb = find(&mut parent, ids.iter().position(|&x| x == b).unwrap());
        if ra == rb {
            cycles += 1;
        } else {
            parent[ra] = rb;
        }
    }
    cycles
}

/// Whether `Z^n / A Z^n` is cyclic, for nonsingular `A` of any size: some
/// (n-1)-minor must be coprime to the determinant.
pub fn cokernel_is_cyclic(a: &[Vec<i64>], det: &BigInt) -> bool {
    let n = a.len();
    if n <= 1 {
        return true;
    }
    let mut g = det.abs();
    for i in 0..n {
        for j in 0..n {
            let m = minor(a, i, j);
            let d = rational_det(&m);
            g = g.gcd(&d);
            if g == BigInt::from(1) {
                return true;
            }
        }
    }
    false
}

/// Determinant via rational elimination (for matrices too large for Laplace).
pub fn rational_det(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> =
        a.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mut det = BigRational::from_integer(1.into());
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= m[k][k].clone();
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let v = &f * &m[k][j];
                m[i][j] -= v;
            }
        }
    }
    det.to_integer()
}
