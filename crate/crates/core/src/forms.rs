//! Left-invariant 2-forms: closedness, the type I / type II splitting with
//! respect to an orthogonal decomposition, exact forms, and second cohomology.
//!
//! Forms are stored in the structural basis, metric-free; adapted-basis
//! coordinates are computed on demand per decomposition. The dual-basis
//! convention is that e^{ij} denotes the form with entries
//! Omega_ij = 1, Omega_ji = -1 and zero elsewhere.

use itertools::Itertools;
use num_traits::Zero;

use crate::algebra::{is_orthogonal_automorphism, Decomposition, LieAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{Mat, vec_is_zero};
use crate::rational::{format_rat, Rat};

/// Skew-symmetric coefficient matrix of an invariant 2-form, with
/// `omega[(a, b)] = w(e_a, e_b)` in the structural basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoForm {
    omega: Mat,
}

impl TwoForm {
    pub fn new(omega: Mat) -> Result<Self> {
        if !omega.is_skew() {
            return Err(Error::NotSkew);
        }
        Ok(TwoForm { omega })
    }

    pub fn zero(dim: usize) -> Self {
        TwoForm {
            omega: Mat::zeros(dim, dim),
        }
    }

    /// Build from 1-based entries `(i, j, c)` with `i < j` meaning the
    /// coefficient of e^{ij}.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, Rat)]) -> Result<Self> {
        let mut m = Mat::zeros(dim, dim);
        for (i, j, c) in entries {
            if *i == 0 || *i > dim {
                return Err(Error::BadIndex { index: *i, dim });
            }
            if *j == 0 || *j > dim {
                return Err(Error::BadIndex { index: *j, dim });
            }
            if i >= j {
                return Err(Error::BadBracketOrder { i: *i, j: *j });
            }
            let (a, b) = (*i - 1, *j - 1);
            m[(a, b)] += c;
            let v = -m[(a, b)].clone();
            m[(b, a)] = v;
        }
        Ok(TwoForm { omega: m })
    }

    /// Integer shorthand for tests and the catalog.
    pub fn from_simple_entries(dim: usize, entries: &[(usize, usize, i64)]) -> Result<Self> {
        let entries: Vec<(usize, usize, Rat)> = entries
            .iter()
            .map(|&(i, j, c)| (i, j, crate::rational::rat(c)))
            .collect();
        TwoForm::from_entries(dim, &entries)
    }

    pub fn dim(&self) -> usize {
        self.omega.nrows()
    }

    pub fn omega(&self) -> &Mat {
        &self.omega
    }

    pub fn get(&self, a: usize, b: usize) -> &Rat {
        &self.omega[(a, b)]
    }

    pub fn is_zero(&self) -> bool {
        self.omega.is_zero()
    }

    pub fn add(&self, other: &TwoForm) -> TwoForm {
        TwoForm {
            omega: self.omega.add(&other.omega),
        }
    }

    pub fn scale(&self, c: &Rat) -> TwoForm {
        TwoForm {
            omega: self.omega.scale(c),
        }
    }

    /// Evaluate on coordinate vectors: `w(x, y) = x^t Omega y`.
    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Rat {
        crate::matrix::dot(x, &self.omega.mul_vec(y))
    }

    /// Flatten to the vector of upper-triangular coordinates, (i<j) in
    /// lexicographic order.
    pub fn to_coords(&self) -> Vec<Rat> {
        let n = self.dim();
        skew_coords(n)
            .map(|(a, b)| self.omega[(a, b)].clone())
            .collect()
    }

    pub fn from_coords(dim: usize, coords: &[Rat]) -> Self {
        let mut m = Mat::zeros(dim, dim);
        for ((a, b), c) in skew_coords(dim).zip(coords) {
            m[(a, b)] = c.clone();
            m[(b, a)] = -c.clone();
        }
        TwoForm { omega: m }
    }

    /// Nonzero upper-triangular entries as 1-based `(i, j, c)`.
    pub fn entries(&self) -> Vec<(usize, usize, Rat)> {
        skew_coords(self.dim())
            .filter(|&(a, b)| !self.omega[(a, b)].is_zero())
            .map(|(a, b)| (a + 1, b + 1, self.omega[(a, b)].clone()))
            .collect()
    }

    /// Print in the paper's e^{ij} wedge notation, e.g. `e^{12} - 2 e^{34}`.
    pub fn display(&self) -> String {
        let entries = self.entries();
        if entries.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, j, c) in entries {
            let basis = if i > 9 || j > 9 {
                format!("e^{{{i},{j}}}")
            } else {
                format!("e^{{{i}{j}}}")
            };
            let coeff = format_rat(&c);
            if out.is_empty() {
                if coeff == "1" {
                    out = basis;
                } else if coeff == "-1" {
                    out = format!("-{basis}");
                } else {
                    out = format!("{coeff} {basis}");
                }
            } else if coeff == "1" {
                out = format!("{out} + {basis}");
            } else if coeff == "-1" {
                out = format!("{out} - {basis}");
            } else if coeff.starts_with('-') {
                out = format!("{out} - {} {basis}", &coeff[1..]);
            } else {
                out = format!("{out} + {coeff} {basis}");
            }
        }
        out
    }
}

/// Upper-triangular index pairs of an n x n skew matrix, lexicographic.
pub fn skew_coords(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| ((a + 1)..n).map(move |b| (a, b)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Closed,
    Exact,
    ClosedTypeI,
    ClosedTypeII,
}

/// A linear space of 2-forms with a kind annotation. Basis elements are
/// checked to be linearly independent at construction.
#[derive(Debug, Clone)]
pub struct FormSpace {
    ambient_dim: usize,
    basis: Vec<TwoForm>,
    kind: FormKind,
    metric_tag: Option<String>,
}

impl FormSpace {
    pub fn new(
        ambient_dim: usize,
        basis: Vec<TwoForm>,
        kind: FormKind,
        metric_tag: Option<String>,
    ) -> Self {
        if !basis.is_empty() {
            let vectors: Vec<Vec<Rat>> = basis.iter().map(TwoForm::to_coords).collect();
            let rank = crate::matrix::span_rank(&vectors);
            assert_eq!(rank, basis.len(), "form space basis is not independent");
        }
        FormSpace {
            ambient_dim,
            basis,
            kind,
            metric_tag,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TwoForm] {
        &self.basis
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn metric_tag(&self) -> Option<&str> {
        self.metric_tag.as_deref()
    }

    /// The element `sum coeffs[b] * basis[b]`.
    pub fn element(&self, coeffs: &[Rat]) -> TwoForm {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut acc = TwoForm::zero(self.ambient_dim);
        for (c, form) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&form.scale(c));
            }
        }
        acc
    }

    /// Membership test: does the span contain the given form?
    pub fn contains(&self, form: &TwoForm) -> bool {
        if form.is_zero() {
            return true;
        }
        let mut vectors: Vec<Vec<Rat>> = self.basis.iter().map(TwoForm::to_coords).collect();
        let r = crate::matrix::span_rank(&vectors);
        vectors.push(form.to_coords());
        crate::matrix::span_rank(&vectors) == r
    }
}

/// The cyclic closedness defect `w([e_a,e_b],e_c) + w([e_b,e_c],e_a) +
/// w([e_c,e_a],e_b)` for one basis triple.
fn closedness_defect(algebra: &LieAlgebra, form: &TwoForm, a: usize, b: usize, c: usize) -> Rat {
    let mut acc = Rat::zero();
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        let w = algebra.bracket_basis(x, y);
        for k in 0..algebra.dim() {
            if !w[k].is_zero() {
                acc += &w[k] * form.get(k, z);
            }
        }
    }
    acc
}

/// True iff the cyclic sum vanishes on all basis triples.
pub fn is_closed(algebra: &LieAlgebra, form: &TwoForm) -> bool {
    assert_eq!(algebra.dim(), form.dim(), "dimension mismatch");
    let n = algebra.dim();
    (0..n)
        .tuple_combinations()
        .all(|(a, b, c)| closedness_defect(algebra, form, a, b, c).is_zero())
}

/// Rows of the closedness operator on the skew coordinate space, one row per
/// basis triple with a nonzero equation.
fn closedness_rows(algebra: &LieAlgebra) -> Vec<Vec<Rat>> {
    let n = algebra.dim();
    let coords: Vec<(usize, usize)> = skew_coords(n).collect();
    let index = |a: usize, b: usize| coords.binary_search(&(a, b)).unwrap();
    let mut rows = Vec::new();
    for (a, b, c) in (0..n).tuple_combinations() {
        let mut row = vec![Rat::zero(); coords.len()];
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            let w = algebra.bracket_basis(x, y);
            for k in 0..n {
                if w[k].is_zero() || k == z {
                    continue;
                }
                if k < z {
                    row[index(k, z)] += &w[k];
                } else {
                    row[index(z, k)] -= &w[k];
                }
            }
        }
        if !vec_is_zero(&row) {
            rows.push(row);
        }
    }
    rows
}

/// Basis of all closed 2-forms (metric-free).
pub fn closed_space(algebra: &LieAlgebra) -> FormSpace {
    let n = algebra.dim();
    let ncoords = n * (n - 1) / 2;
    let rows = closedness_rows(algebra);
    let basis: Vec<TwoForm> = if rows.is_empty() {
        // everything is closed
        (0..ncoords)
            .map(|t| {
                let coords = crate::matrix::unit_vec(ncoords, t);
                TwoForm::from_coords(n, &coords)
            })
            .collect()
    } else {
        Mat::from_rows(rows)
            .nullspace()
            .into_iter()
            .map(|v| TwoForm::from_coords(n, &v))
            .collect()
    };
    FormSpace::new(n, basis, FormKind::Closed, None)
}

fn structural_to_adapted(dec: &Decomposition, form: &TwoForm) -> Mat {
    let p = dec.basis_change();
    p.transpose().mul(form.omega()).mul(p)
}

fn adapted_to_structural(dec: &Decomposition, omega_ad: &Mat) -> TwoForm {
    let pinv = dec.basis_change_inv();
    TwoForm::new(pinv.transpose().mul(omega_ad).mul(pinv))
        .expect("congruence of a skew matrix stays skew")
}

/// Split into the part preserving the v/z blocks (type I) and the part
/// pairing v with z only (type II); the two summands reassemble the input
/// exactly.
pub fn split_form(dec: &Decomposition, form: &TwoForm) -> (TwoForm, TwoForm) {
    assert_eq!(dec.algebra().dim(), form.dim(), "dimension mismatch");
    let m = dec.dim_v();
    let n = form.dim();
    let ad = structural_to_adapted(dec, form);
    let mut diag = Mat::zeros(n, n);
    let mut off = Mat::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let same_block = (a < m) == (b < m);
            if same_block {
                diag[(a, b)] = ad[(a, b)].clone();
            } else {
                off[(a, b)] = ad[(a, b)].clone();
            }
        }
    }
    (
        adapted_to_structural(dec, &diag),
        adapted_to_structural(dec, &off),
    )
}

/// Statistics of the homogeneous type-II closedness system
/// `sum_s (C_ij^s b_sk + C_jk^s b_si + C_ki^s b_sj) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeIISystem {
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub solution_dim: usize,
}

fn type_ii_rows(dec: &Decomposition) -> (usize, Vec<Vec<Rat>>) {
    let m = dec.dim_v();
    let q = dec.dim_z();
    let unknowns = q * m;
    // b[t][k] = w(z_t, v_k) laid out as t * m + k
    let mut rows = Vec::new();
    for (i, j, k) in (0..m).tuple_combinations() {
        let mut row = vec![Rat::zero(); unknowns];
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            let (key, flip) = if x < y { ((x, y), false) } else { ((y, x), true) };
            if let Some(coords) = dec.adapted_bracket(key.0, key.1) {
                for s in 0..q {
                    if coords[s].is_zero() {
                        continue;
                    }
                    if flip {
                        row[s * m + z] -= &coords[s];
                    } else {
                        row[s * m + z] += &coords[s];
                    }
                }
            }
        }
        if !vec_is_zero(&row) {
            rows.push(row);
        }
    }
    (unknowns, rows)
}

pub fn type_ii_system(dec: &Decomposition) -> TypeIISystem {
    let (unknowns, rows) = type_ii_rows(dec);
    let equations = rows.len();
    let rank = if rows.is_empty() {
        0
    } else {
        Mat::from_rows(rows).rank()
    };
    TypeIISystem {
        unknowns,
        equations,
        rank,
        solution_dim: unknowns - rank,
    }
}

/// Basis of closed 2-forms of type II with respect to the decomposition.
pub fn type_ii_closed_space(dec: &Decomposition) -> FormSpace {
    let m = dec.dim_v();
    let q = dec.dim_z();
    let n = dec.algebra().dim();
    let (unknowns, rows) = type_ii_rows(dec);
    let solutions: Vec<Vec<Rat>> = if rows.is_empty() {
        (0..unknowns)
            .map(|t| crate::matrix::unit_vec(unknowns, t))
            .collect()
    } else {
        Mat::from_rows(rows).nullspace()
    };
    let basis = solutions
        .into_iter()
        .map(|b| {
            let mut ad = Mat::zeros(n, n);
            for t in 0..q {
                for k in 0..m {
                    let val = b[t * m + k].clone();
                    if !val.is_zero() {
                        ad[(m + t, k)] = val.clone();
                        ad[(k, m + t)] = -val;
                    }
                }
            }
            adapted_to_structural(dec, &ad)
        })
        .collect();
    FormSpace::new(
        n,
        basis,
        FormKind::ClosedTypeII,
        Some(dec.metric().tag().to_owned()),
    )
}

/// Basis of closed 2-forms of type I: any pairing on v, plus pairings on z
/// whose induced skew map sends z into ker(j), i.e. annihilates C(n).
pub fn type_i_closed_space(dec: &Decomposition) -> FormSpace {
    let m = dec.dim_v();
    let q = dec.dim_z();
    let n = dec.algebra().dim();
    let mut basis = Vec::new();
    // v-block: all of so(v) as forms
    for (a, b) in skew_coords(m) {
        let mut ad = Mat::zeros(n, n);
        ad[(a, b)] = Rat::from_integer(1.into());
        ad[(b, a)] = Rat::from_integer((-1).into());
        basis.push(adapted_to_structural(dec, &ad));
    }
    // z-block: skew pairings D with D(c, .) = 0 for every commutator element c
    let zcoords: Vec<(usize, usize)> = skew_coords(q).collect();
    if !zcoords.is_empty() {
        let gammas: Vec<Vec<Rat>> = dec
            .commutator_basis()
            .iter()
            .map(|c| {
                dec.center_coords(c)
                    .expect("commutator lies in the center")
            })
            .collect();
        let mut rows = Vec::new();
        for gamma in &gammas {
            for t in 0..q {
                let mut row = vec![Rat::zero(); zcoords.len()];
                for s in 0..q {
                    if gamma[s].is_zero() || s == t {
                        continue;
                    }
                    let idx = zcoords
                        .binary_search(&if s < t { (s, t) } else { (t, s) })
                        .unwrap();
                    if s < t {
                        row[idx] += &gamma[s];
                    } else {
                        row[idx] -= &gamma[s];
                    }
                }
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        let solutions: Vec<Vec<Rat>> = if rows.is_empty() {
            (0..zcoords.len())
                .map(|t| crate::matrix::unit_vec(zcoords.len(), t))
                .collect()
        } else {
            Mat::from_rows(rows).nullspace()
        };
        for sol in solutions {
            let mut ad = Mat::zeros(n, n);
            for (idx, &(s, t)) in zcoords.iter().enumerate() {
                if !sol[idx].is_zero() {
                    ad[(m + s, m + t)] = sol[idx].clone();
                    ad[(m + t, m + s)] = -sol[idx].clone();
                }
            }
            basis.push(adapted_to_structural(dec, &ad));
        }
    }
    FormSpace::new(
        n,
        basis,
        FormKind::ClosedTypeI,
        Some(dec.metric().tag().to_owned()),
    )
}

/// Basis of exact forms: the forms of j(Z_a) over the commutator basis,
/// converted from Lorentz-force to form coordinates via Omega = G F.
pub fn exact_space(dec: &Decomposition) -> FormSpace {
    let n = dec.algebra().dim();
    let m = dec.dim_v();
    let basis: Vec<TwoForm> = dec
        .commutator_basis()
        .iter()
        .map(|z| {
            let coords = dec.center_coords(z).expect("commutator lies in the center");
            let j = dec.j_map_center_coords(&coords);
            let mut f_ad = Mat::zeros(n, n);
            for a in 0..m {
                for b in 0..m {
                    f_ad[(a, b)] = j[(a, b)].clone();
                }
            }
            // conjugate the map back to structural coordinates, then lower
            // an index with the metric
            let p = dec.basis_change();
            let f = p.mul(&f_ad).mul(dec.basis_change_inv());
            TwoForm::new(dec.metric().gram().mul(&f)).expect("G F is skew for a G-skew F")
        })
        .collect();
    FormSpace::new(
        n,
        basis,
        FormKind::Exact,
        Some(dec.metric().tag().to_owned()),
    )
}

/// dim H^2 = dim(closed) - dim(exact); the metric used internally is the
/// identity and the result is metric-free.
pub fn betti2(algebra: &LieAlgebra) -> usize {
    let closed = closed_space(algebra).dim();
    let metric = crate::algebra::Metric::identity(algebra.dim());
    let dec = Decomposition::new(algebra, &metric).expect("identity metric is positive-definite");
    closed - exact_space(&dec).dim()
}

/// Push a form through an orthogonal automorphism: the form of
/// `psi o F o psi^{-1}`, which in form coordinates is
/// `(psi^{-1})^t Omega psi^{-1}`.
pub fn conjugate_form(dec: &Decomposition, psi: &Mat, form: &TwoForm) -> Result<TwoForm> {
    if !is_orthogonal_automorphism(dec.algebra(), dec.metric(), psi) {
        return Err(Error::NotAutomorphism);
    }
    let inv = psi.inverse().expect("orthogonal maps are invertible");
    Ok(TwoForm::new(inv.transpose().mul(form.omega()).mul(&inv))
        .expect("congruence preserves skewness"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Metric;
    use crate::rational::rat;

    fn h1() -> LieAlgebra {
        LieAlgebra::from_simple_brackets(3, "h1", &[(1, 2, 3, 1)]).unwrap()
    }

    fn f6() -> LieAlgebra {
        LieAlgebra::from_simple_brackets(6, "f6", &[(1, 2, 4, 1), (1, 3, 5, 1), (2, 3, 6, 1)])
            .unwrap()
    }

    fn dec_of(alg: &LieAlgebra) -> Decomposition {
        Decomposition::new(alg, &Metric::identity(alg.dim())).unwrap()
    }

    #[test]
    fn every_form_on_h1_is_closed() {
        let alg = h1();
        for entries in [
            vec![(1, 2, 1)],
            vec![(1, 3, 2)],
            vec![(2, 3, -1)],
            vec![(1, 2, 3), (1, 3, 5), (2, 3, 7)],
        ] {
            let form = TwoForm::from_simple_entries(3, &entries).unwrap();
            assert!(is_closed(&alg, &form));
        }
        assert_eq!(closed_space(&alg).dim(), 3);
    }

    #[test]
    fn abelian_everything_closed() {
        let alg = LieAlgebra::abelian(4);
        let form = TwoForm::from_simple_entries(4, &[(1, 4, 2), (2, 3, -5)]).unwrap();
        assert!(is_closed(&alg, &form));
        assert_eq!(closed_space(&alg).dim(), 6);
    }

    #[test]
    fn e25_alone_not_closed_on_f6() {
        let alg = f6();
        // violates the constraint a25 = a16 + a34
        let form = TwoForm::from_simple_entries(6, &[(2, 5, 1)]).unwrap();
        assert!(!is_closed(&alg, &form));
        // Table constraint a25 = a16 + a34 satisfied by the paper's witness
        let witness =
            TwoForm::from_simple_entries(6, &[(1, 6, 1), (2, 5, 2), (3, 4, 1)]).unwrap();
        assert!(is_closed(&alg, &witness));
    }

    #[test]
    fn split_reassembles_and_respects_blocks() {
        let alg = h1();
        let dec = dec_of(&alg);
        let form = TwoForm::from_simple_entries(3, &[(1, 2, 1), (1, 3, 1)]).unwrap();
        let (one, two) = split_form(&dec, &form);
        assert_eq!(one, TwoForm::from_simple_entries(3, &[(1, 2, 1)]).unwrap());
        assert_eq!(two, TwoForm::from_simple_entries(3, &[(1, 3, 1)]).unwrap());
        assert_eq!(one.add(&two), form);
        // a form with zero v x z pairings has trivial type-II part
        let diag = TwoForm::from_simple_entries(3, &[(1, 2, 5)]).unwrap();
        let (_, two) = split_form(&dec, &diag);
        assert!(two.is_zero());
    }

    #[test]
    fn type_spaces_on_h1() {
        let dec = dec_of(&h1());
        assert_eq!(type_i_closed_space(&dec).dim(), 1);
        let t2 = type_ii_closed_space(&dec);
        assert_eq!(t2.dim(), 2);
        for form in t2.basis() {
            assert!(is_closed(dec.algebra(), form));
        }
    }

    #[test]
    fn type_ii_vanishes_on_h2() {
        let alg =
            LieAlgebra::from_simple_brackets(5, "h2", &[(1, 2, 5, 1), (3, 4, 5, 1)]).unwrap();
        let dec = dec_of(&alg);
        assert_eq!(type_ii_closed_space(&dec).dim(), 0);
        let sys = type_ii_system(&dec);
        assert_eq!(sys.unknowns, 4);
        assert_eq!(sys.rank, 4);
    }

    #[test]
    fn exact_space_of_h1_is_e12() {
        let dec = dec_of(&h1());
        let exact = exact_space(&dec);
        assert_eq!(exact.dim(), 1);
        // spanned by e^{12}
        let e12 = TwoForm::from_simple_entries(3, &[(1, 2, 1)]).unwrap();
        assert!(exact.contains(&e12));
        for form in exact.basis() {
            assert!(is_closed(dec.algebra(), form));
        }
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(betti2(&h1()), 2);
        assert_eq!(betti2(&LieAlgebra::abelian(4)), 6);
        assert_eq!(betti2(&LieAlgebra::abelian(5)), 10);
    }

    #[test]
    fn conjugation_by_rotation_preserves_closedness() {
        let alg = h1();
        let dec = dec_of(&alg);
        let psi = Mat::from_rows(vec![
            vec![rat(0), rat(-1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ]);
        let form = TwoForm::from_simple_entries(3, &[(1, 3, 1), (2, 3, 2)]).unwrap();
        let out = conjugate_form(&dec, &psi, &form).unwrap();
        assert!(is_closed(&alg, &out));
        // identity automorphism fixes the form
        let same = conjugate_form(&dec, &Mat::identity(3), &form).unwrap();
        assert_eq!(same, form);
        // non-automorphisms are rejected
        let swap = Mat::from_rows(vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
        ]);
        assert!(matches!(
            conjugate_form(&dec, &swap, &form),
            Err(Error::NotAutomorphism)
        ));
    }

    #[test]
    fn display_notation() {
        let form = TwoForm::from_simple_entries(4, &[(1, 2, 1), (3, 4, -2)]).unwrap();
        assert_eq!(form.display(), "e^{12} - 2 e^{34}");
        assert_eq!(TwoForm::zero(3).display(), "0");
    }
}
