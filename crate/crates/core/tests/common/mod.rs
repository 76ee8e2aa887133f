//! Brute-force oracles that share no code with the library's exterior-algebra
//! and linear-algebra layers: cochains are evaluated on tuples of basis
//! vectors with the alternating coboundary formula, and ranks come from a
//! naive elimination written here.

#![allow(dead_code)]

use nilform::algebra::StructureConstants;
use nilform::linalg::Matrix;
use nilform::{GaussianRational, LieAlgebra};
use rand::Rng;

pub type Q = GaussianRational;

pub fn q(n: i64) -> Q {
    Q::from_int(n)
}

/// Rank by plain Gaussian elimination on a row-major copy.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut a: Vec<Vec<Q>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for k in c..cols {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// A Lie bracket on `dim` basis vectors, as dense `bracket[i][j][k]`.
pub struct Bracket {
    pub dim: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

impl Bracket {
    pub fn real(sc: &StructureConstants) -> Self {
        let n = sc.dim();
        let c = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| sc.get(i, j, k)).collect()).collect())
            .collect();
        Bracket { dim: n, c }
    }

    /// Bracket of `g ⊗ ℂ` on the frame `v_a = (e_{2a-1} − i e_{2a})/2`,
    /// `v̄_a = (e_{2a-1} + i e_{2a})/2` (indices `0..m` then `m..2m`), for
    /// the standard complex structure `J e_{2a-1} = e_{2a}`.
    pub fn complex_frame(sc: &StructureConstants) -> Self {
        let n = sc.dim();
        let m = n / 2;
        let half = Q::ratio(1, 2);
        let i = Q::i();
        let frame: Vec<Vec<Q>> = (0..n)
            .map(|f| {
                let (a, sign) = if f < m { (f, -1) } else { (f - m, 1) };
                let mut v = vec![q(0); n];
                v[2 * a] = half.clone();
                v[2 * a + 1] = &(&i * &half) * &q(sign);
                v
            })
            .collect();
        let to_frame = |x: &[Q]| -> Vec<Q> {
            let mut out = vec![q(0); n];
            for a in 0..m {
                let ix = &i * &x[2 * a + 1];
                out[a] = &x[2 * a] + &ix;
                out[m + a] = &x[2 * a] - &ix;
            }
            out
        };
        let mut c = vec![vec![vec![q(0); n]; n]; n];
        for f in 0..n {
            for g in 0..n {
                let mut br = vec![q(0); n];
                for (s, xs) in frame[f].iter().enumerate() {
                    for (t, yt) in frame[g].iter().enumerate() {
                        if xs.is_zero() || yt.is_zero() {
                            continue;
                        }
                        let coeff = xs * yt;
                        for k in 0..n {
                            let v = sc.get(s, t, k);
                            if !v.is_zero() {
                                br[k] += &coeff * &v;
                            }
                        }
                    }
                }
                c[f][g] = to_frame(&br);
            }
        }
        Bracket { dim: n, c }
    }
}

/// Sign and sorted form of a tuple of distinct indices; `None` on repeats.
fn sort_sign(t: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut v = t.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

/// `(dα)(x_0..x_k) = Σ_{i<j} (−1)^{i+j} α([x_i, x_j], x_0, ..x̂_i..x̂_j.., x_k)` as a
/// matrix from `source` tuples (the cochain basis) to `target` tuples.
pub fn coboundary(br: &Bracket, source: &[Vec<usize>], target: &[Vec<usize>]) -> Vec<Vec<Q>> {
    let index: std::collections::HashMap<&Vec<usize>, usize> =
        source.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut rows = vec![vec![q(0); source.len()]; target.len()];
    for (r, x) in target.iter().enumerate() {
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                let rest: Vec<usize> = (0..x.len())
                    .filter(|&t| t != i && t != j)
                    .map(|t| x[t])
                    .collect();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                for (l, coeff) in br.c[x[i]][x[j]].iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut tuple = vec![l];
                    tuple.extend(&rest);
                    if let Some((s, sorted)) = sort_sign(&tuple) {
                        if let Some(&col) = index.get(&sorted) {
                            rows[r][col] += coeff * &q(sign * s);
                        }
                    }
                }
            }
        }
    }
    rows
}

/// Betti numbers of `g` by brute force.
pub fn betti_oracle(sc: &StructureConstants) -> Vec<usize> {
    let n = sc.dim();
    let br = Bracket::real(sc);
    let all: Vec<usize> = (0..n).collect();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| combinations(&all, k)).collect();
    let ranks: Vec<usize> = (0..n)
        .map(|k| rank(&coboundary(&br, &bases[k], &bases[k + 1])))
        .collect();
    (0..=n)
        .map(|k| {
            let into = if k == 0 { 0 } else { ranks[k - 1] };
            let out = if k == n { 0 } else { ranks[k] };
            bases[k].len() - out - into
        })
        .collect()
}

fn bidegree_tuples(m: usize, p: usize, q: usize) -> Vec<Vec<usize>> {
    let holo: Vec<usize> = (0..m).collect();
    let anti: Vec<usize> = (m..2 * m).collect();
    let mut out = Vec::new();
    for h in combinations(&holo, p) {
        for a in combinations(&anti, q) {
            let mut t = h.clone();
            t.extend(a);
            out.push(t);
        }
    }
    out
}

/// `h^{p,q}` for the standard complex structure: `∂̄` is the full coboundary
/// evaluated on `(p, q+1)` tuples of the complex frame.
pub fn hodge_oracle(sc: &StructureConstants) -> Vec<Vec<usize>> {
    let m = sc.dim() / 2;
    let br = Bracket::complex_frame(sc);
    let rk = |p: usize, q: usize| -> usize {
        if q >= m {
            return 0;
        }
        rank(&coboundary(&br, &bidegree_tuples(m, p, q), &bidegree_tuples(m, p, q + 1)))
    };
    (0..=m)
        .map(|p| {
            (0..=m)
                .map(|q| {
                    let dim = bidegree_tuples(m, p, q).len();
                    let into = if q == 0 { 0 } else { rk(p, q - 1) };
                    dim - rk(p, q) - into
                })
                .collect()
        })
        .collect()
}

pub fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn heisenberg3() -> StructureConstants {
    StructureConstants::new(3).with(0, 1, 2, 1)
}

pub fn kodaira_thurston() -> StructureConstants {
    StructureConstants::new(4).with(0, 1, 2, 1)
}

pub fn iwasawa() -> StructureConstants {
    StructureConstants::new(6)
        .with(0, 2, 4, 1)
        .with(1, 3, 4, -1)
        .with(0, 3, 5, 1)
        .with(1, 2, 5, 1)
}

/// Filiform `[e_1, e_i] = e_{i+1}` in dimension `n ≥ 3`.
pub fn filiform(n: usize) -> StructureConstants {
    (1..n - 1).fold(StructureConstants::new(n), |sc, i| sc.with(0, i, i + 1, 1))
}

fn random_invertible(rng: &mut impl Rng, n: usize) -> (Matrix, Matrix) {
    loop {
        let rows: Vec<Vec<Q>> = (0..n)
            .map(|_| (0..n).map(|_| q(rng.gen_range(-2..=2))).collect())
            .collect();
        let p = Matrix::from_rows(n, rows);
        if let Some(inv) = p.inverse() {
            return (p, inv);
        }
    }
}

/// Random rational change of basis of `sc`.
pub fn random_base_change(rng: &mut impl Rng, sc: &StructureConstants) -> StructureConstants {
    let (frame, coframe) = random_invertible(rng, sc.dim());
    sc.change_basis(&frame, &coframe)
}

/// Direct sum of two structure-constant tensors.
pub fn direct_sum(a: &StructureConstants, b: &StructureConstants) -> StructureConstants {
    let (n, k) = (a.dim(), b.dim());
    let mut sc = StructureConstants::new(n + k);
    for (i, j, l, v) in a.nonzero() {
        sc.set(i, j, l, v.clone()).unwrap();
    }
    for (i, j, l, v) in b.nonzero() {
        sc.set(n + i, n + j, n + l, v.clone()).unwrap();
    }
    sc
}

/// A random nilpotent Lie algebra of dimension `n ≥ 1`: either a random base
/// change of a sum of standard pieces, or a rejection-sampled strictly
/// triangular tensor.
pub fn random_nilpotent(rng: &mut impl Rng, n: usize) -> StructureConstants {
    if rng.gen_bool(0.5) {
        let mut pieces = Vec::new();
        let mut left = n;
        while left > 0 {
            let choice = rng.gen_range(0..3);
            let piece = match choice {
                0 if left >= 3 => heisenberg3(),
                1 if left >= 4 => filiform(rng.gen_range(4..=left.min(5))),
                _ => StructureConstants::new(1),
            };
            left -= piece.dim();
            pieces.push(piece);
        }
        let sum = pieces[1..].iter().fold(pieces[0].clone(), |acc, p| direct_sum(&acc, p));
        return random_base_change(rng, &sum);
    }
    loop {
        let mut sc = StructureConstants::new(n);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if rng.gen_bool(0.3) {
                        sc.set(i, j, k, q(rng.gen_range(-2..=2))).unwrap();
                    }
                }
            }
        }
        if sc.jacobi_violations().is_empty() {
            return sc;
        }
    }
}

/// Validated wrapper.
pub fn algebra(sc: StructureConstants) -> LieAlgebra {
    LieAlgebra::new(sc).expect("valid Lie algebra")
}
