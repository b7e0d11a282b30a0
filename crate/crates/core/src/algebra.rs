//! 2-step nilpotent Lie algebras with exact structure constants, metrics,
//! the orthogonal decomposition n = v + z, j-maps, and the singularity and
//! H-type classification.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{dot, span_basis, span_rank, vec_is_zero, Mat};
use crate::poly::UniPoly;
use crate::rational::{rat, Rat};

/// A 2-step nilpotent Lie algebra given by exact structure constants.
///
/// Brackets are stored for index pairs `i < j` only (1-based in the public
/// constructor, matching the file format); `[e_j, e_i] = -[e_i, e_j]` is
/// implicit. A bracket value is a full coordinate vector in the structural
/// basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    brackets: BTreeMap<(usize, usize), Vec<Rat>>,
    name: Option<String>,
}

impl LieAlgebra {
    /// Build from 1-based bracket entries `(i, j, [(k, c), ...])` meaning
    /// `[e_i, e_j] = sum c e_k`. Requires `i < j`; duplicate `(i, j)` entries
    /// are rejected rather than summed.
    pub fn new(
        dim: usize,
        name: Option<&str>,
        entries: &[(usize, usize, Vec<(usize, Rat)>)],
    ) -> Result<Self> {
        let mut brackets = BTreeMap::new();
        for (i, j, terms) in entries {
            let (i, j) = (*i, *j);
            if i == 0 || i > dim {
                return Err(Error::BadIndex { index: i, dim });
            }
            if j == 0 || j > dim {
                return Err(Error::BadIndex { index: j, dim });
            }
            if i >= j {
                return Err(Error::BadBracketOrder { i, j });
            }
            let mut vec = vec![Rat::zero(); dim];
            for (k, c) in terms {
                if *k == 0 || *k > dim {
                    return Err(Error::BadIndex { index: *k, dim });
                }
                vec[*k - 1] += c;
            }
            if brackets.insert((i - 1, j - 1), vec).is_some() {
                return Err(Error::DuplicateBracket { i, j });
            }
        }
        Ok(LieAlgebra {
            dim,
            brackets,
            name: name.map(str::to_owned),
        })
    }

    /// Convenience constructor for single-term integer brackets
    /// `[e_i, e_j] = c e_k`, 1-based.
    pub fn from_simple_brackets(
        dim: usize,
        name: &str,
        brackets: &[(usize, usize, usize, i64)],
    ) -> Result<Self> {
        let mut grouped: BTreeMap<(usize, usize), Vec<(usize, Rat)>> = BTreeMap::new();
        for &(i, j, k, c) in brackets {
            grouped.entry((i, j)).or_default().push((k, rat(c)));
        }
        let entries: Vec<_> = grouped.into_iter().map(|((i, j), t)| (i, j, t)).collect();
        LieAlgebra::new(dim, Some(name), &entries)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            brackets: BTreeMap::new(),
            name: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_owned());
        self
    }

    /// Iterate stored bracket entries as 1-based `(i, j, coordinate vector)`.
    pub fn bracket_entries(&self) -> impl Iterator<Item = (usize, usize, &Vec<Rat>)> {
        self.brackets.iter().map(|(&(i, j), v)| (i + 1, j + 1, v))
    }

    /// `[e_a, e_b]` as a coordinate vector, 0-based indices in any order.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Vec<Rat> {
        if a == b {
            return vec![Rat::zero(); self.dim];
        }
        let (key, flip) = if a < b { ((a, b), false) } else { ((b, a), true) };
        match self.brackets.get(&key) {
            None => vec![Rat::zero(); self.dim],
            Some(v) if flip => v.iter().map(|c| -c.clone()).collect(),
            Some(v) => v.clone(),
        }
    }

    /// `[x, y]` for coordinate vectors, by bilinearity.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (&(a, b), w) in &self.brackets {
            // coefficient of [e_a, e_b] in [x, y] is x_a y_b - x_b y_a
            let c = &x[a] * &y[b] - &x[b] * &y[a];
            if !c.is_zero() {
                for k in 0..self.dim {
                    if !w[k].is_zero() {
                        out[k] += &c * &w[k];
                    }
                }
            }
        }
        out
    }

    /// Check 2-step nilpotency: `[[e_i, e_j], e_k] = 0` for all basis triples.
    /// This forces the Jacobi identity.
    pub fn validate(&self) -> Result<()> {
        for (&(a, b), w) in &self.brackets {
            for k in 0..self.dim {
                let ek: Vec<Rat> = (0..self.dim)
                    .map(|t| if t == k { Rat::one() } else { Rat::zero() })
                    .collect();
                if !vec_is_zero(&self.bracket(w, &ek)) {
                    return Err(Error::NotTwoStep {
                        i: a + 1,
                        j: b + 1,
                        k: k + 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// Basis of the center `z = { x : [x, e_k] = 0 for all k }`, as the exact
    /// null space of the stacked adjoint matrices.
    pub fn center(&self) -> Vec<Vec<Rat>> {
        let mut rows = Vec::new();
        for k in 0..self.dim {
            // row block: coordinates of [x, e_k] = sum_a x_a [e_a, e_k]
            let cols: Vec<Vec<Rat>> = (0..self.dim).map(|a| self.bracket_basis(a, k)).collect();
            for c in 0..self.dim {
                let row: Vec<Rat> = (0..self.dim).map(|a| cols[a][c].clone()).collect();
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Mat::zeros(0, self.dim).nullspace();
        }
        Mat::from_rows(rows).nullspace()
    }

    /// Echelonized basis of the commutator ideal `C(n) = span{[e_i, e_j]}`.
    pub fn commutator(&self) -> Vec<Vec<Rat>> {
        let vectors: Vec<Vec<Rat>> = self.brackets.values().cloned().collect();
        span_basis(&vectors, self.dim)
    }
}

/// A positive-definite inner product, stored as its Gram matrix in the
/// structural basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    gram: Mat,
    tag: String,
}

impl Metric {
    pub fn identity(n: usize) -> Self {
        Metric {
            gram: Mat::identity(n),
            tag: "identity".to_owned(),
        }
    }

    pub fn from_gram(gram: Mat) -> Result<Self> {
        if !gram.is_positive_definite() {
            return Err(Error::DegenerateMetric);
        }
        Ok(Metric {
            gram,
            tag: "custom".to_owned(),
        })
    }

    /// Deterministic-from-seed SPD matrix `A^t A + n Id` with small integer `A`.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Mat::from_fn(n, n, |_, _| rat(rng.gen_range(-2i64..=2)));
        let gram = a.transpose().mul(&a).add(&Mat::identity(n).scale(&rat(n as i64)));
        Metric {
            gram,
            tag: format!("random(seed={seed})"),
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn inner(&self, x: &[Rat], y: &[Rat]) -> Rat {
        dot(&self.gram.mul_vec(y), x)
    }
}

/// Which of the three singularity classes the pair (algebra, metric) falls in,
/// together with whether the decision procedure was exact for this input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityKind {
    NonSingular,
    AlmostNonSingular,
    Singular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    Proven,
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularityClass {
    pub kind: SingularityKind,
    pub certainty: Certainty,
}

impl std::fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SingularityKind::NonSingular => write!(f, "non-singular"),
            SingularityKind::AlmostNonSingular => write!(f, "almost non-singular"),
            SingularityKind::Singular => write!(f, "singular"),
        }
    }
}

/// The orthogonal splitting n = v + z (v = z-perp w.r.t. the metric), plus the
/// finer splitting z = C(n) + ker(j).
///
/// The v-basis is G-orthogonal to the center but not normalized; every formula
/// downstream carries Gram matrices instead of assuming orthonormality.
#[derive(Debug, Clone)]
pub struct Decomposition {
    algebra: LieAlgebra,
    metric: Metric,
    center_basis: Vec<Vec<Rat>>,
    v_basis: Vec<Vec<Rat>>,
    commutator_basis: Vec<Vec<Rat>>,
    kerj_basis: Vec<Vec<Rat>>,
    /// Change of basis: columns are v_basis then center_basis.
    basis_change: Mat,
    basis_change_inv: Mat,
    v_gram: Mat,
    v_gram_inv: Mat,
    /// [v_i, v_j] for i < j, expressed in center coordinates.
    adapted_brackets: BTreeMap<(usize, usize), Vec<Rat>>,
    /// Per bracket, the vector g with <Z, [v_i, v_j]> = dot(coords(Z), g).
    bracket_pairings: BTreeMap<(usize, usize), Vec<Rat>>,
}

impl Decomposition {
    pub fn new(algebra: &LieAlgebra, metric: &Metric) -> Result<Self> {
        let n = algebra.dim();
        if metric.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: metric.dim(),
            });
        }
        if !metric.gram().is_positive_definite() {
            return Err(Error::DegenerateMetric);
        }
        let center_basis = algebra.center();
        let commutator_basis = algebra.commutator();
        let q = center_basis.len();

        // v = G-orthogonal complement of the center
        let v_basis = if q == 0 {
            Mat::zeros(0, n).nullspace()
        } else {
            let rows: Vec<Vec<Rat>> = center_basis
                .iter()
                .map(|z| metric.gram().mul_vec(z))
                .collect();
            Mat::from_rows(rows).nullspace()
        };
        let m = v_basis.len();
        assert_eq!(m + q, n, "center complement has wrong dimension");

        // ker(j) = { Z in z : <Z, [V, W]> = 0 for all V, W } = G-orthocomplement
        // of C(n) inside z
        let kerj_basis = if commutator_basis.is_empty() {
            center_basis.clone()
        } else {
            let rows: Vec<Vec<Rat>> = commutator_basis
                .iter()
                .map(|b| {
                    center_basis
                        .iter()
                        .map(|z| metric.inner(b, z))
                        .collect::<Vec<Rat>>()
                })
                .collect();
            Mat::from_rows(rows)
                .nullspace()
                .into_iter()
                .map(|alpha| {
                    (0..n)
                        .map(|t| {
                            (0..q)
                                .map(|s| &alpha[s] * &center_basis[s][t])
                                .sum::<Rat>()
                        })
                        .collect()
                })
                .collect()
        };

        let basis_change = Mat::from_fn(n, n, |r, c| {
            if c < m {
                v_basis[c][r].clone()
            } else {
                center_basis[c - m][r].clone()
            }
        });
        let basis_change_inv = basis_change
            .inverse()
            .expect("adapted basis must be invertible");
        let v_gram = Mat::from_fn(m, m, |i, j| metric.inner(&v_basis[i], &v_basis[j]));
        let v_gram_inv = if m == 0 {
            Mat::zeros(0, 0)
        } else {
            v_gram.inverse().expect("restricted metric must be invertible")
        };

        // [v_i, v_j] lies in C(n), a subspace of z; express it in center coordinates
        let zmat = Mat::from_fn(n, q, |r, c| center_basis[c][r].clone());
        let z_gram = Mat::from_fn(q, q, |i, j| metric.inner(&center_basis[i], &center_basis[j]));
        let mut adapted_brackets = BTreeMap::new();
        let mut bracket_pairings = BTreeMap::new();
        for i in 0..m {
            for j in (i + 1)..m {
                let w = algebra.bracket(&v_basis[i], &v_basis[j]);
                if vec_is_zero(&w) {
                    continue;
                }
                let coords = zmat
                    .solve(&w)
                    .expect("bracket of v-vectors must lie in the center");
                bracket_pairings.insert((i, j), z_gram.mul_vec(&coords));
                adapted_brackets.insert((i, j), coords);
            }
        }

        Ok(Decomposition {
            algebra: algebra.clone(),
            metric: metric.clone(),
            center_basis,
            v_basis,
            commutator_basis,
            kerj_basis,
            basis_change,
            basis_change_inv,
            v_gram,
            v_gram_inv,
            adapted_brackets,
            bracket_pairings,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn center_basis(&self) -> &[Vec<Rat>] {
        &self.center_basis
    }

    pub fn v_basis(&self) -> &[Vec<Rat>] {
        &self.v_basis
    }

    pub fn commutator_basis(&self) -> &[Vec<Rat>] {
        &self.commutator_basis
    }

    pub fn kerj_basis(&self) -> &[Vec<Rat>] {
        &self.kerj_basis
    }

    pub fn dim_v(&self) -> usize {
        self.v_basis.len()
    }

    pub fn dim_z(&self) -> usize {
        self.center_basis.len()
    }

    pub fn dim_commutator(&self) -> usize {
        self.commutator_basis.len()
    }

    pub fn dim_kerj(&self) -> usize {
        self.kerj_basis.len()
    }

    /// Change of basis with columns v_basis then center_basis.
    pub fn basis_change(&self) -> &Mat {
        &self.basis_change
    }

    pub fn basis_change_inv(&self) -> &Mat {
        &self.basis_change_inv
    }

    pub fn v_gram(&self) -> &Mat {
        &self.v_gram
    }

    /// `[v_i, v_j]` in center coordinates, for i < j (0-based v indices).
    pub fn adapted_bracket(&self, i: usize, j: usize) -> Option<&Vec<Rat>> {
        self.adapted_brackets.get(&(i, j))
    }

    /// Coordinates of a structural vector in the center basis, if it lies in z.
    pub fn center_coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let q = self.dim_z();
        let n = self.algebra.dim();
        let zmat = Mat::from_fn(n, q, |r, c| self.center_basis[c][r].clone());
        zmat.solve(v)
    }

    /// Matrix of j(Z) on the v-basis for a center element given in structural
    /// coordinates. Defined by <j(Z)V, W> = <Z, [V, W]>; with column-vector
    /// convention this solves G_v J = -B, where B_ab = <Z, [v_a, v_b]>.
    pub fn j_map(&self, z_structural: &[Rat]) -> Result<Mat> {
        if z_structural.len() != self.algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.algebra.dim(),
                got: z_structural.len(),
            });
        }
        let q = self.dim_z();
        let n = self.algebra.dim();
        let zmat = Mat::from_fn(n, q, |r, c| self.center_basis[c][r].clone());
        let coords = zmat.solve(z_structural).ok_or(Error::VectorNotInCenter)?;
        Ok(self.j_map_center_coords(&coords))
    }

    /// j(Z) for Z given in center-basis coordinates.
    pub fn j_map_center_coords(&self, coords: &[Rat]) -> Mat {
        let m = self.dim_v();
        let mut b = Mat::zeros(m, m);
        for (&(i, j), pairing) in &self.bracket_pairings {
            let val = dot(coords, pairing);
            if !val.is_zero() {
                b[(i, j)] = val.clone();
                b[(j, i)] = -val;
            }
        }
        self.v_gram_inv.mul(&b).neg()
    }

    fn det_j_center_coords(&self, coords: &[Rat]) -> Rat {
        self.j_map_center_coords(coords).det()
    }

    /// Type-H test: j(Z_a) j(Z_b) + j(Z_b) j(Z_a) = -2 <Z_a, Z_b> Id for all
    /// pairs of center basis vectors (the polarized form of
    /// j(Z)^2 = -<Z, Z> Id).
    pub fn is_h_type(&self) -> bool {
        let q = self.dim_z();
        let m = self.dim_v();
        let jmats: Vec<Mat> = (0..q)
            .map(|s| {
                let coords: Vec<Rat> = (0..q)
                    .map(|t| if t == s { Rat::one() } else { Rat::zero() })
                    .collect();
                self.j_map_center_coords(&coords)
            })
            .collect();
        for a in 0..q {
            for b in a..q {
                let ip = self.metric.inner(&self.center_basis[a], &self.center_basis[b]);
                let want = Mat::identity(m).scale(&(rat(-2) * &ip));
                let got = jmats[a].mul(&jmats[b]).add(&jmats[b].mul(&jmats[a]));
                if got != want {
                    return false;
                }
            }
        }
        true
    }

    /// Decide the singularity trichotomy for det j(z_1 Z_1 + ... + z_q Z_q).
    ///
    /// The decision is exact (Proven) whenever dim z <= 2, whenever the
    /// polynomial is identically zero, and under the H-type shortcut; for
    /// dim z >= 3 otherwise the non-singular/almost split is sampled on a
    /// deterministic integer grid and marked Heuristic.
    pub fn classify_singularity(&self) -> SingularityClass {
        let m = self.dim_v();
        let q = self.dim_z();
        if m == 0 || q == 0 {
            // j(Z) acts on a zero-dimensional space: vacuously invertible
            return SingularityClass {
                kind: SingularityKind::NonSingular,
                certainty: Certainty::Proven,
            };
        }
        if m % 2 == 1 {
            // det of a metric-skew map in odd dimension vanishes identically
            return SingularityClass {
                kind: SingularityKind::Singular,
                certainty: Certainty::Proven,
            };
        }
        // p identically zero? A homogeneous polynomial of total degree m
        // vanishes iff it vanishes on the grid {0..m}^q.
        let mut p_nonzero = false;
        'outer: for point in (0..q).map(|_| 0..=(m as i64)).multi_cartesian_product() {
            if point.iter().all(|&x| x == 0) {
                continue;
            }
            let coords: Vec<Rat> = point.iter().map(|&x| rat(x)).collect();
            if !self.det_j_center_coords(&coords).is_zero() {
                p_nonzero = true;
                break 'outer;
            }
        }
        if !p_nonzero {
            return SingularityClass {
                kind: SingularityKind::Singular,
                certainty: Certainty::Proven,
            };
        }
        if q == 1 {
            // p = z^m det(j(Z_1)) and p is not identically zero
            return SingularityClass {
                kind: SingularityKind::NonSingular,
                certainty: Certainty::Proven,
            };
        }
        if q == 2 {
            // Binary form: real-root analysis of the two dehomogenizations.
            let mut samples = Vec::with_capacity(m + 1);
            for t in 0..=(m as i64) {
                samples.push((rat(t), self.det_j_center_coords(&[Rat::one(), rat(t)])));
            }
            let p1t = interpolate(&samples);
            let p01 = self.det_j_center_coords(&[Rat::zero(), Rat::one()]);
            let kind = if p1t.count_real_roots() == 0 && !p01.is_zero() {
                SingularityKind::NonSingular
            } else {
                SingularityKind::AlmostNonSingular
            };
            return SingularityClass {
                kind,
                certainty: Certainty::Proven,
            };
        }
        // q >= 3
        if self.is_h_type() {
            return SingularityClass {
                kind: SingularityKind::NonSingular,
                certainty: Certainty::Proven,
            };
        }
        // Deterministic grid of 2 deg(p) + 1 values per variable.
        let bound = m as i64;
        for point in (0..q).map(|_| -bound..=bound).multi_cartesian_product() {
            if point.iter().all(|&x| x == 0) {
                continue;
            }
            let coords: Vec<Rat> = point.iter().map(|&x| rat(x)).collect();
            if self.det_j_center_coords(&coords).is_zero() {
                return SingularityClass {
                    kind: SingularityKind::AlmostNonSingular,
                    certainty: Certainty::Heuristic,
                };
            }
        }
        SingularityClass {
            kind: SingularityKind::NonSingular,
            certainty: Certainty::Heuristic,
        }
    }
}

/// Exact Newton interpolation through the given (x, y) samples.
fn interpolate(samples: &[(Rat, Rat)]) -> UniPoly {
    let n = samples.len();
    // divided differences
    let mut table: Vec<Rat> = samples.iter().map(|(_, y)| y.clone()).collect();
    let xs: Vec<Rat> = samples.iter().map(|(x, _)| x.clone()).collect();
    let mut coeffs = vec![table[0].clone()];
    for level in 1..n {
        for i in 0..(n - level) {
            let num = &table[i + 1] - &table[i];
            let den = &xs[i + level] - &xs[i];
            table[i] = num / den;
        }
        table.truncate(n - level);
        coeffs.push(table[0].clone());
    }
    // expand Newton form sum coeffs[k] prod_{t<k} (x - xs[t])
    let mut acc = UniPoly::zero();
    let mut basis = UniPoly::new(vec![Rat::one()]);
    for (k, c) in coeffs.iter().enumerate() {
        let term = UniPoly::new(
            basis_coeffs(&basis)
                .iter()
                .map(|b| b * c)
                .collect::<Vec<Rat>>(),
        );
        acc = add_unipoly(&acc, &term);
        if k + 1 < n {
            basis = mul_lin(&basis, &xs[k]);
        }
    }
    acc
}

fn basis_coeffs(p: &UniPoly) -> Vec<Rat> {
    (0..=p.degree()).map(|k| p.coeff(k)).collect()
}

fn add_unipoly(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let n = (a.degree() + 1).max(b.degree() + 1);
    UniPoly::new((0..n).map(|k| a.coeff(k) + b.coeff(k)).collect())
}

/// (x - c) * p
fn mul_lin(p: &UniPoly, c: &Rat) -> UniPoly {
    if p.is_zero() {
        return UniPoly::zero();
    }
    let d = p.degree();
    let mut out = vec![Rat::zero(); d + 2];
    for k in 0..=d {
        let pk = p.coeff(k);
        out[k + 1] += &pk;
        out[k] -= c * &pk;
    }
    UniPoly::new(out)
}

/// True iff `psi` preserves brackets on all basis pairs and the metric.
pub fn is_orthogonal_automorphism(algebra: &LieAlgebra, metric: &Metric, psi: &Mat) -> bool {
    let n = algebra.dim();
    if psi.nrows() != n || psi.ncols() != n {
        return false;
    }
    if psi.transpose().mul(metric.gram()).mul(psi) != *metric.gram() {
        return false;
    }
    for a in 0..n {
        for b in (a + 1)..n {
            let lhs = psi.mul_vec(&algebra.bracket_basis(a, b));
            let rhs = algebra.bracket(&psi.col(a), &psi.col(b));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Containment of spans, exact: every vector of `sub` lies in span(`sup`).
pub fn span_contained(sub: &[Vec<Rat>], sup: &[Vec<Rat>]) -> bool {
    if sub.is_empty() {
        return true;
    }
    let sup_rank = span_rank(sup);
    let mut all: Vec<Vec<Rat>> = sup.to_vec();
    all.extend(sub.iter().cloned());
    span_rank(&all) == sup_rank
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn heisenberg3() -> LieAlgebra {
        LieAlgebra::from_simple_brackets(3, "h1", &[(1, 2, 3, 1)]).unwrap()
    }

    fn g5() -> LieAlgebra {
        LieAlgebra::from_simple_brackets(5, "g5", &[(1, 3, 4, 1), (2, 3, 5, 1)]).unwrap()
    }

    #[test]
    fn validate_accepts_heisenberg_and_abelian() {
        heisenberg3().validate().unwrap();
        LieAlgebra::abelian(4).validate().unwrap();
    }

    #[test]
    fn validate_rejects_non_two_step() {
        // [e1, e2] = e1 gives [[e1, e2], e2] = e1 != 0
        let a = LieAlgebra::from_simple_brackets(3, "bad", &[(1, 2, 1, 1)]).unwrap();
        let err = a.validate().unwrap_err();
        assert!(matches!(err, Error::NotTwoStep { .. }));
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(matches!(
            LieAlgebra::from_simple_brackets(3, "x", &[(1, 2, 4, 1)]),
            Err(Error::BadIndex { index: 4, dim: 3 })
        ));
        assert!(matches!(
            LieAlgebra::from_simple_brackets(3, "x", &[(2, 1, 3, 1)]),
            Err(Error::BadBracketOrder { .. })
        ));
        let dup = LieAlgebra::new(
            3,
            None,
            &[
                (1, 2, vec![(3, rat(1))]),
                (1, 2, vec![(3, rat(2))]),
            ],
        );
        assert!(matches!(dup, Err(Error::DuplicateBracket { i: 1, j: 2 })));
    }

    #[test]
    fn center_of_heisenberg_is_e3() {
        let z = heisenberg3().center();
        assert_eq!(z.len(), 1);
        assert_eq!(z[0], vec![rat(0), rat(0), rat(1)]);
        assert_eq!(LieAlgebra::abelian(4).center().len(), 4);
    }

    #[test]
    fn center_of_g5_is_e4_e5() {
        let z = g5().center();
        assert_eq!(z.len(), 2);
        let mat = Mat::from_rows(z.clone());
        // e4 and e5 span: every basis vector must have zero first three coords
        for v in z {
            assert!(v[0].is_zero() && v[1].is_zero() && v[2].is_zero());
        }
        assert_eq!(mat.rank(), 2);
    }

    #[test]
    fn commutator_dims() {
        assert_eq!(heisenberg3().commutator().len(), 1);
        let f6 = LieAlgebra::from_simple_brackets(
            6,
            "f6",
            &[(1, 2, 4, 1), (1, 3, 5, 1), (2, 3, 6, 1)],
        )
        .unwrap();
        assert_eq!(f6.commutator().len(), 3);
        assert_eq!(LieAlgebra::abelian(5).commutator().len(), 0);
    }

    #[test]
    fn decompose_heisenberg() {
        let alg = heisenberg3();
        let dec = Decomposition::new(&alg, &Metric::identity(3)).unwrap();
        assert_eq!(dec.dim_v(), 2);
        assert_eq!(dec.dim_z(), 1);
        assert_eq!(dec.dim_kerj(), 0);
        // diagonal metric keeps the coordinate complement
        let mut gram = Mat::identity(3);
        gram[(2, 2)] = rat(4);
        let dec2 = Decomposition::new(&alg, &Metric::from_gram(gram).unwrap()).unwrap();
        assert_eq!(dec2.dim_v(), 2);
        assert_eq!(dec2.dim_z(), 1);
    }

    #[test]
    fn decompose_h1_plus_r() {
        let alg = LieAlgebra::from_simple_brackets(4, "h1+R", &[(1, 2, 3, 1)]).unwrap();
        let dec = Decomposition::new(&alg, &Metric::identity(4)).unwrap();
        assert_eq!(dec.dim_z(), 2);
        assert_eq!(dec.dim_commutator(), 1);
        assert_eq!(dec.dim_kerj(), 1);
        // ker j = span{e4}
        assert_eq!(dec.kerj_basis()[0], vec![rat(0), rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn j_map_heisenberg_matches_rotation() {
        let alg = heisenberg3();
        let dec = Decomposition::new(&alg, &Metric::identity(3)).unwrap();
        let j = dec.j_map(&[rat(0), rat(0), rat(1)]).unwrap();
        let expected = Mat::from_rows(vec![
            vec![rat(0), rat(-1)],
            vec![rat(1), rat(0)],
        ]);
        assert_eq!(j, expected);
        // metric skew-symmetry G_v J + J^t G_v = 0
        let gv = dec.v_gram().clone();
        assert!(gv.mul(&j).add(&j.transpose().mul(&gv)).is_zero());
        // vector outside the center is rejected
        assert!(matches!(
            dec.j_map(&[rat(1), rat(0), rat(0)]),
            Err(Error::VectorNotInCenter)
        ));
    }

    #[test]
    fn j_map_vanishes_on_kerj() {
        let alg = LieAlgebra::from_simple_brackets(4, "h1+R", &[(1, 2, 3, 1)]).unwrap();
        let dec = Decomposition::new(&alg, &Metric::identity(4)).unwrap();
        let j = dec.j_map(&[rat(0), rat(0), rat(0), rat(1)]).unwrap();
        assert!(j.is_zero());
    }

    #[test]
    fn singularity_classes() {
        let h1 = Decomposition::new(&heisenberg3(), &Metric::identity(3)).unwrap();
        assert_eq!(
            h1.classify_singularity(),
            SingularityClass {
                kind: SingularityKind::NonSingular,
                certainty: Certainty::Proven
            }
        );
        let h1r = LieAlgebra::from_simple_brackets(4, "h1+R", &[(1, 2, 3, 1)]).unwrap();
        let dec = Decomposition::new(&h1r, &Metric::identity(4)).unwrap();
        assert_eq!(
            dec.classify_singularity(),
            SingularityClass {
                kind: SingularityKind::AlmostNonSingular,
                certainty: Certainty::Proven
            }
        );
        let g5d = Decomposition::new(&g5(), &Metric::identity(5)).unwrap();
        assert_eq!(g5d.classify_singularity().kind, SingularityKind::Singular);
        assert_eq!(g5d.classify_singularity().certainty, Certainty::Proven);
    }

    #[test]
    fn h_type_checks() {
        let h1 = Decomposition::new(&heisenberg3(), &Metric::identity(3)).unwrap();
        assert!(h1.is_h_type());
        let g5d = Decomposition::new(&g5(), &Metric::identity(5)).unwrap();
        assert!(!g5d.is_h_type());
    }

    #[test]
    fn orthogonal_automorphism_of_heisenberg() {
        let alg = heisenberg3();
        let metric = Metric::identity(3);
        // psi(v + z) = A v + det(A) z with A = rotation by 90 degrees
        let psi = Mat::from_rows(vec![
            vec![rat(0), rat(-1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ]);
        assert!(is_orthogonal_automorphism(&alg, &metric, &psi));
        assert!(is_orthogonal_automorphism(&alg, &metric, &Mat::identity(3)));
        // swapping e1 and e3 does not preserve the bracket
        let swap = Mat::from_rows(vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
        ]);
        assert!(!is_orthogonal_automorphism(&alg, &metric, &swap));
    }

    #[test]
    fn random_metric_is_deterministic_and_spd() {
        let m0 = Metric::random(3, 0);
        let m1 = Metric::random(3, 0);
        assert_eq!(m0.gram(), m1.gram());
        assert!(m0.gram().is_positive_definite());
        assert_ne!(Metric::random(3, 1).gram(), m0.gram());
        for seed in 0..3 {
            assert!(Metric::random(5, seed).gram().is_positive_definite());
        }
    }

    #[test]
    fn interpolation_is_exact() {
        // p(t) = t^2 - 3t + 2 through samples at 0, 1, 2
        let samples = vec![
            (rat(0), rat(2)),
            (rat(1), rat(0)),
            (rat(2), rat(0)),
        ];
        let p = interpolate(&samples);
        assert_eq!(p.coeff(0), rat(2));
        assert_eq!(p.coeff(1), rat(-3));
        assert_eq!(p.coeff(2), rat(1));
    }
}
