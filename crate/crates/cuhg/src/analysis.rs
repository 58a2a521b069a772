//! Executable verification of the spectral statements the operators satisfy:
//! trace identities, dual-spectrum relations, kernel coincidences, regular
//! equivalences, deletion interlacing, switching invariance, and the
//! smallest/largest-eigenvalue bounds. Checks report verdicts; only
//! malformed inputs raise errors, so the suite doubles as a fuzzing harness.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeSet;

use crate::eigen::{
    gershgorin_bound, hermitian_eig, nullity_from, spectral_radius, NullityPolicy, Spectrum,
};
use crate::hypergraph::{Hypergraph, SwitchKind, SwitchingFunction};
use crate::matrix::ComplexMatrix;
use crate::operators::{
    adjacency_matrix, degree_matrix, dual_kirchhoff, dual_normalized, incidence_matrix,
    kirchhoff, kirchhoff_from_incidence, normalized, sym_normalized,
};
use crate::phase::Phase;
use crate::{io, Error, Result};

const ENTRYWISE_TOL: f64 = 1e-12;
const SPECTRAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail)
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Measurement {
    pub label: String,
    pub value: f64,
}

/// Structured outcome of one theorem check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub inputs_digest: String,
    pub measured: Vec<Measurement>,
    pub tolerance: f64,
    pub verdict: Verdict,
}

/// All quantities of the degree/size eigenvalue bounds, with one verdict per
/// bound. Every verdict is recomputable from the stored reals.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub inputs_digest: String,
    pub delta: usize,
    pub nabla: usize,
    pub is_regular: bool,
    pub is_uniform: bool,
    pub rho_a: f64,
    pub gershgorin_a: f64,
    pub lambda_max_k: f64,
    pub lambda_max_k_underlying: f64,
    pub lambda_max_l: Option<f64>,
    pub lambda_max_l_underlying: Option<f64>,
    pub alpha: Option<usize>,
    pub alpha_witness: Option<Vec<usize>>,
    pub vol_ratio: Option<f64>,
    pub verdicts: Vec<(String, Verdict)>,
}

impl BoundReport {
    pub fn failed(&self) -> usize {
        self.verdicts.iter().filter(|(_, v)| v.is_fail()).count()
    }

    pub fn to_check_report(&self) -> CheckReport {
        let mut measured = vec![
            Measurement {
                label: "delta".into(),
                value: self.delta as f64,
            },
            Measurement {
                label: "nabla".into(),
                value: self.nabla as f64,
            },
            Measurement {
                label: "rho_A".into(),
                value: self.rho_a,
            },
            Measurement {
                label: "lambda_max_K".into(),
                value: self.lambda_max_k,
            },
            Measurement {
                label: "lambda_max_K_underlying".into(),
                value: self.lambda_max_k_underlying,
            },
        ];
        if let Some(l) = self.lambda_max_l {
            measured.push(Measurement {
                label: "lambda_max_L".into(),
                value: l,
            });
        }
        if let Some(a) = self.alpha {
            measured.push(Measurement {
                label: "alpha".into(),
                value: a as f64,
            });
        }
        CheckReport {
            check_name: "bounds".into(),
            inputs_digest: self.inputs_digest.clone(),
            measured,
            tolerance: SPECTRAL_TOL,
            verdict: if self.failed() == 0 {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
        }
    }
}

fn digest(g: &Hypergraph, extra: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(io::serialize(g).as_bytes());
    hasher.update(b"|");
    hasher.update(extra.as_bytes());
    let out = hasher.finalize();
    out[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Incremental builder for a `CheckReport`.
struct Check {
    name: String,
    digest: String,
    tolerance: f64,
    measured: Vec<Measurement>,
    ok: bool,
}

impl Check {
    fn new(name: &str, g: &Hypergraph, extra: &str, tolerance: f64) -> Check {
        Check {
            name: name.to_string(),
            digest: digest(g, &format!("{name}|{extra}")),
            tolerance,
            measured: vec![],
            ok: true,
        }
    }

    fn note(&mut self, label: &str, value: f64) {
        self.measured.push(Measurement {
            label: label.to_string(),
            value,
        });
    }

    /// Assert lhs <= rhs + tol; records the margin lhs - rhs.
    fn le(&mut self, label: &str, lhs: f64, rhs: f64, tol: f64) {
        self.note(label, lhs - rhs);
        if lhs > rhs + tol {
            self.ok = false;
        }
    }

    /// Assert |a - b| <= tol; records the deviation.
    fn close(&mut self, label: &str, a: f64, b: f64, tol: f64) {
        self.note(label, (a - b).abs());
        if (a - b).abs() > tol {
            self.ok = false;
        }
    }

    fn eq_int(&mut self, label: &str, a: i64, b: i64) {
        self.note(label, (a - b) as f64);
        if a != b {
            self.ok = false;
        }
    }

    fn require(&mut self, label: &str, holds: bool) {
        self.note(label, if holds { 0.0 } else { 1.0 });
        if !holds {
            self.ok = false;
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            check_name: self.name,
            inputs_digest: self.digest,
            measured: self.measured,
            tolerance: self.tolerance,
            verdict: if self.ok { Verdict::Pass } else { Verdict::Fail },
        }
    }
}

fn skipped(name: &str, g: &Hypergraph, extra: &str, reason: &str) -> CheckReport {
    CheckReport {
        check_name: name.to_string(),
        inputs_digest: digest(g, &format!("{name}|{extra}")),
        measured: vec![],
        tolerance: SPECTRAL_TOL,
        verdict: Verdict::Skipped(reason.to_string()),
    }
}

fn eig_values(m: &ComplexMatrix) -> Vec<f64> {
    hermitian_eig(m, false)
        .expect("eigensolver failed on a Hermitian operator")
        .values
}

fn spectrum_of(m: &ComplexMatrix, want_vectors: bool) -> Spectrum {
    hermitian_eig(m, want_vectors).expect("eigensolver failed on a Hermitian operator")
}

fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
}

fn spectral_tol(values: &[f64]) -> f64 {
    SPECTRAL_TOL * (1.0 + max_abs(values))
}

/// Values with |lambda| above the nullity threshold, still sorted.
fn nonzero_part(values: &[f64], tau: f64) -> Vec<f64> {
    values.iter().copied().filter(|v| v.abs() > tau).collect()
}

/// Max pointwise deviation of two sorted multisets, or None on a length
/// mismatch.
fn multiset_deviation(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    Some(
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max),
    )
}

fn compare_multisets(c: &mut Check, label: &str, a: &[f64], b: &[f64], tol: f64) {
    match multiset_deviation(a, b) {
        Some(dev) => {
            c.note(label, dev);
            if dev > tol {
                c.ok = false;
            }
        }
        None => {
            c.require(&format!("{label}_length_match"), false);
        }
    }
}

fn all_degrees_positive(g: &Hypergraph) -> bool {
    g.zero_degree_vertices().is_empty()
}

fn random_unit_phases(rng: &mut ChaCha8Rng, len: usize) -> Vec<Phase> {
    (0..len)
        .map(|_| Phase::from_angle(rng.gen::<f64>() * 2.0 * std::f64::consts::PI))
        .collect()
}

fn random_complex_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

fn quadratic_form(m: &ComplexMatrix, x: &[Complex64]) -> Complex64 {
    let mx = m.apply(x);
    x.iter().zip(&mx).map(|(xi, yi)| xi.conj() * yi).sum()
}

/// Construction identities: K = BB+, L = D^{-1}BB+, Hermiticity of the
/// square operators, and the edge-sum quadratic forms for K and calL.
pub fn check_operator_identities(g: &Hypergraph, seed: u64) -> CheckReport {
    let mut c = Check::new("operator_identities", g, &seed.to_string(), ENTRYWISE_TOL);
    let k = kirchhoff(g);
    let bbp = kirchhoff_from_incidence(g);
    c.le("K_vs_BBplus", k.max_abs_diff(&bbp), 0.0, ENTRYWISE_TOL);

    let a = adjacency_matrix(g);
    let diag_a = (0..a.rows()).map(|i| a.get(i, i).norm()).fold(0.0, f64::max);
    c.le("A_zero_diagonal", diag_a, 0.0, 0.0);
    let degrees = g.degrees();
    let k_diag_exact = (0..k.rows()).all(|i| k.get(i, i) == Complex64::new(degrees[i] as f64, 0.0));
    c.require("K_diagonal_equals_degrees", k_diag_exact);

    c.le("A_hermitian_dev", a.hermitian_deviation(), 0.0, ENTRYWISE_TOL);
    c.le("K_hermitian_dev", k.hermitian_deviation(), 0.0, ENTRYWISE_TOL);
    c.le(
        "Kstar_hermitian_dev",
        dual_kirchhoff(g).hermitian_deviation(),
        0.0,
        ENTRYWISE_TOL,
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.vertex_count();
    let mut worst_k_form = 0.0f64;
    for _ in 0..100 {
        if n == 0 {
            break;
        }
        let x = random_complex_vector(&mut rng, n);
        let direct = quadratic_form(&k, &x).re;
        let edge_sum = crate::eigen::edge_sum_quadratic(g, &x, None);
        let dev = (direct - edge_sum).abs() / (1.0 + direct.abs());
        worst_k_form = worst_k_form.max(dev);
    }
    c.le("K_quadratic_form_rel_dev", worst_k_form, 0.0, 1e-9);

    if all_degrees_positive(g) {
        let d = degree_matrix(g);
        let inv_deg: Vec<f64> = degrees.iter().map(|&x| 1.0 / x as f64).collect();
        let ones = vec![1.0; n];
        let l = normalized(g).unwrap();
        c.le(
            "L_vs_Dinv_BBplus",
            l.max_abs_diff(&bbp.scale_rows_cols(&inv_deg, &ones)),
            0.0,
            ENTRYWISE_TOL,
        );
        let call = sym_normalized(g).unwrap();
        c.le("calL_hermitian_dev", call.hermitian_deviation(), 0.0, ENTRYWISE_TOL);
        c.le(
            "Lstar_hermitian_dev",
            dual_normalized(g).unwrap().hermitian_deviation(),
            0.0,
            ENTRYWISE_TOL,
        );
        let sqrt: Vec<f64> = (0..n).map(|i| d.get(i, i).re.sqrt()).collect();
        let inv_sqrt: Vec<f64> = sqrt.iter().map(|s| 1.0 / s).collect();
        c.le(
            "calL_vs_similarity_of_L",
            call.max_abs_diff(&l.scale_rows_cols(&sqrt, &inv_sqrt)),
            0.0,
            ENTRYWISE_TOL,
        );
        let weights = inv_sqrt.clone();
        let mut worst_l_form = 0.0f64;
        for _ in 0..100 {
            let x = random_complex_vector(&mut rng, n);
            let direct = quadratic_form(&call, &x).re;
            let edge_sum = crate::eigen::edge_sum_quadratic(g, &x, Some(&weights));
            let dev = (direct - edge_sum).abs() / (1.0 + direct.abs());
            worst_l_form = worst_l_form.max(dev);
        }
        c.le("calL_quadratic_form_rel_dev", worst_l_form, 0.0, 1e-9);
    } else {
        c.note("L_subchecks_skipped_zero_degree", 1.0);
    }
    c.finish()
}

/// Trace identities: sum lambda(A) = 0, sum lambda(K) = vol V, sum
/// lambda(L) = n.
pub fn check_trace_identities(g: &Hypergraph) -> CheckReport {
    let mut c = Check::new("trace_identities", g, "", SPECTRAL_TOL);
    let vol = g.degree_profile().volume() as f64;
    let n = g.vertex_count() as f64;

    let sum_a: f64 = eig_values(&adjacency_matrix(g)).iter().sum();
    c.close("sum_lambda_A", sum_a, 0.0, SPECTRAL_TOL);

    let sum_k: f64 = eig_values(&kirchhoff(g)).iter().sum();
    c.close("sum_lambda_K_vs_vol", sum_k, vol, SPECTRAL_TOL * (1.0 + vol));
    let sum_kstar: f64 = eig_values(&dual_kirchhoff(g)).iter().sum();
    c.close(
        "sum_lambda_Kstar_vs_vol",
        sum_kstar,
        vol,
        SPECTRAL_TOL * (1.0 + vol),
    );

    if all_degrees_positive(g) {
        let sum_l: f64 = eig_values(&sym_normalized(g).unwrap()).iter().sum();
        c.close("sum_lambda_L_vs_n", sum_l, n, SPECTRAL_TOL * (1.0 + n));
    } else {
        c.note("L_subcheck_skipped_zero_degree", 1.0);
    }
    c.finish()
}

/// K vs K* (and L vs L*) share their non-zero spectra; zero multiplicities
/// differ by n - m; K of the dual equals K* entrywise.
pub fn check_dual_spectra(g: &Hypergraph) -> CheckReport {
    let mut c = Check::new("dual_spectra", g, "", SPECTRAL_TOL);
    let policy = NullityPolicy::default();
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;

    let spec_k = spectrum_of(&kirchhoff(g), false);
    let spec_kstar = spectrum_of(&dual_kirchhoff(g), false);
    let tau = policy.threshold(&spec_k).max(policy.threshold(&spec_kstar));
    let nz_k = nonzero_part(&spec_k.values, tau);
    let nz_kstar = nonzero_part(&spec_kstar.values, tau);
    let tol = spectral_tol(&spec_k.values);
    compare_multisets(&mut c, "nonzero_K_vs_Kstar", &nz_k, &nz_kstar, tol);

    let mu0_k = (spec_k.values.len() - nz_k.len()) as i64;
    let mu0_kstar = (spec_kstar.values.len() - nz_kstar.len()) as i64;
    c.eq_int("mu0K_minus_mu0Kstar_vs_n_minus_m", mu0_k - mu0_kstar, n - m);

    c.le(
        "K_of_dual_vs_Kstar",
        kirchhoff(&g.dual()).max_abs_diff(&dual_kirchhoff(g)),
        0.0,
        ENTRYWISE_TOL,
    );

    if all_degrees_positive(g) {
        let spec_l = spectrum_of(&sym_normalized(g).unwrap(), false);
        let spec_lstar = spectrum_of(&dual_normalized(g).unwrap(), false);
        let tau_l = policy.threshold(&spec_l).max(policy.threshold(&spec_lstar));
        let nz_l = nonzero_part(&spec_l.values, tau_l);
        let nz_lstar = nonzero_part(&spec_lstar.values, tau_l);
        compare_multisets(
            &mut c,
            "nonzero_L_vs_Lstar",
            &nz_l,
            &nz_lstar,
            spectral_tol(&spec_l.values),
        );
        let mu0_l = (spec_l.values.len() - nz_l.len()) as i64;
        let mu0_lstar = (spec_lstar.values.len() - nz_lstar.len()) as i64;
        c.eq_int("mu0L_minus_mu0Lstar_vs_n_minus_m", mu0_l - mu0_lstar, n - m);
        c.eq_int("mu0K_vs_mu0L", mu0_k, mu0_l);
        c.eq_int("mu0Kstar_vs_mu0Lstar", mu0_kstar, mu0_lstar);
    } else {
        c.note("L_subchecks_skipped_zero_degree", 1.0);
    }
    c.finish()
}

/// ker K = ker L = ker B+, verified through ranks and through the computed
/// null vectors.
pub fn check_kernels(g: &Hypergraph) -> CheckReport {
    if !all_degrees_positive(g) {
        return skipped("kernels", g, "", "zero-degree vertex: L undefined");
    }
    let mut c = Check::new("kernels", g, "", SPECTRAL_TOL);
    let policy = NullityPolicy::default();
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;

    let spec_k = spectrum_of(&kirchhoff(g), true);
    let nullity_k = nullity_from(&spec_k, &policy) as i64;
    let spec_kstar = spectrum_of(&dual_kirchhoff(g), false);
    let rank_b = m - nullity_from(&spec_kstar, &policy) as i64;
    c.eq_int("nullityK_vs_n_minus_rankB", nullity_k, n - rank_b);

    let b_adj = incidence_matrix(g).adjoint();
    let l = normalized(g).unwrap();
    let tau = policy.threshold(&spec_k);
    let mut worst_bplus = 0.0f64;
    let mut worst_l = 0.0f64;
    let vectors = spec_k.vectors.as_ref().unwrap();
    for (lambda, x) in spec_k.values.iter().zip(vectors) {
        if lambda.abs() > tau {
            continue;
        }
        let bx = b_adj.apply(x);
        let lx = l.apply(x);
        let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        worst_bplus = worst_bplus.max(norm(&bx));
        worst_l = worst_l.max(norm(&lx));
    }
    c.le("max_Bplus_nullvec_norm", worst_bplus, 0.0, SPECTRAL_TOL);
    c.le("max_L_nullvec_norm", worst_l, 0.0, SPECTRAL_TOL);
    c.finish()
}

/// For d-regular hypergraphs: spec(L) = spec(K)/d and spec(A) = d - spec(K).
pub fn check_regular_equivalence(g: &Hypergraph) -> CheckReport {
    let profile = g.degree_profile();
    if !profile.is_regular {
        return skipped("regular_equivalence", g, "", "not regular");
    }
    let mut c = Check::new("regular_equivalence", g, "", SPECTRAL_TOL);
    let d = profile.max_degree as f64;
    let spec_k = eig_values(&kirchhoff(g));
    let spec_a = eig_values(&adjacency_matrix(g));

    let mut expect_a: Vec<f64> = spec_k.iter().map(|l| d - l).collect();
    expect_a.sort_by(f64::total_cmp);
    compare_multisets(&mut c, "A_vs_d_minus_K", &spec_a, &expect_a, spectral_tol(&spec_k));

    if profile.max_degree >= 1 {
        let spec_l = eig_values(&sym_normalized(g).unwrap());
        let expect_l: Vec<f64> = spec_k.iter().map(|l| l / d).collect();
        compare_multisets(&mut c, "L_vs_K_over_d", &spec_l, &expect_l, spectral_tol(&spec_l));
    } else {
        c.note("L_subcheck_skipped_zero_degree", 1.0);
    }
    c.finish()
}

/// For d-regular, k-uniform hypergraphs: L(G*) = (d/k) L*(G) and
/// L*(G*) = (d/k) L(G).
pub fn check_regular_uniform_dual_l(g: &Hypergraph) -> CheckReport {
    let profile = g.degree_profile();
    if !(profile.is_regular && profile.is_uniform) {
        return skipped("regular_uniform_dual_L", g, "", "not regular and uniform");
    }
    if profile.max_degree == 0 || profile.max_size == 0 {
        return skipped(
            "regular_uniform_dual_L",
            g,
            "",
            "degenerate: zero degree or empty edge list",
        );
    }
    let mut c = Check::new("regular_uniform_dual_L", g, "", ENTRYWISE_TOL);
    let ratio = profile.max_degree as f64 / profile.max_size as f64;
    let dual = g.dual();
    let l_dual = normalized(&dual).unwrap();
    let lstar = dual_normalized(g).unwrap();
    c.le(
        "L_of_dual_vs_ratio_Lstar",
        l_dual.max_abs_diff(&lstar.scale(ratio)),
        0.0,
        ENTRYWISE_TOL,
    );
    let lstar_dual = dual_normalized(&dual).unwrap();
    let l = normalized(g).unwrap();
    c.le(
        "Lstar_of_dual_vs_ratio_L",
        lstar_dual.max_abs_diff(&l.scale(ratio)),
        0.0,
        ENTRYWISE_TOL,
    );
    c.finish()
}

fn interlace_chains(c: &mut Check, label: &str, full: &[f64], sub: &[f64], r: usize) {
    let mut worst_lower = f64::NEG_INFINITY;
    let mut worst_upper = f64::NEG_INFINITY;
    for (k, s) in sub.iter().enumerate() {
        worst_lower = worst_lower.max(full[k] - s);
        worst_upper = worst_upper.max(s - full[k + r]);
    }
    if sub.is_empty() {
        c.note(&format!("{label}_trivial"), 0.0);
        return;
    }
    c.le(&format!("{label}_lower_chain_margin"), worst_lower, 0.0, SPECTRAL_TOL);
    c.le(&format!("{label}_upper_chain_margin"), worst_upper, 0.0, SPECTRAL_TOL);
}

/// Cauchy interlacing under weak vertex deletion, for A, K and calL.
pub fn check_vertex_deletion_interlacing(g: &Hypergraph, remove: &[usize]) -> Result<CheckReport> {
    let set: BTreeSet<usize> = remove.iter().copied().collect();
    let s: Vec<usize> = set.into_iter().collect();
    let n = g.vertex_count();
    if !s.is_empty() && s.len() >= n {
        return Err(Error::BadParameter(
            "vertex deletion interlacing needs |S| < n".into(),
        ));
    }
    let (hat, _) = g.weak_delete_vertices(&s)?;
    let r = s.len();
    let extra = format!("S={s:?}");
    let mut c = Check::new("interlacing_vertex_deletion", g, &extra, SPECTRAL_TOL);
    c.note("r", r as f64);

    let spec_a = eig_values(&adjacency_matrix(g));
    let spec_a_hat = eig_values(&adjacency_matrix(&hat));
    interlace_chains(&mut c, "A", &spec_a, &spec_a_hat, r);

    let spec_k = eig_values(&kirchhoff(g));
    let spec_k_hat = eig_values(&kirchhoff(&hat));
    interlace_chains(&mut c, "K", &spec_k, &spec_k_hat, r);

    if all_degrees_positive(g) && all_degrees_positive(&hat) {
        let spec_l = eig_values(&sym_normalized(g).unwrap());
        let spec_l_hat = eig_values(&sym_normalized(&hat).unwrap());
        interlace_chains(&mut c, "calL", &spec_l, &spec_l_hat, r);
    } else {
        c.note("calL_subcheck_skipped_zero_degree", 1.0);
    }
    Ok(c.finish())
}

/// Interlacing of K under weak edge deletion: the upper chain holds for
/// every index, the lower chain for indices above r.
pub fn check_edge_deletion_interlacing(g: &Hypergraph, remove: &[usize]) -> Result<CheckReport> {
    let set: BTreeSet<usize> = remove.iter().copied().collect();
    let f: Vec<usize> = set.into_iter().collect();
    let hat = g.weak_delete_edges(&f)?;
    let r = f.len();
    let extra = format!("F={f:?}");
    let mut c = Check::new("interlacing_edge_deletion", g, &extra, SPECTRAL_TOL);
    c.note("r", r as f64);

    let spec_g = eig_values(&kirchhoff(g));
    let spec_h = eig_values(&kirchhoff(&hat));
    let n = spec_g.len();
    let mut worst_upper = f64::NEG_INFINITY;
    let mut worst_lower = f64::NEG_INFINITY;
    for j in 0..n {
        worst_upper = worst_upper.max(spec_h[j] - spec_g[j]);
        if j >= r {
            worst_lower = worst_lower.max(spec_g[j - r] - spec_h[j]);
        }
    }
    if n > 0 {
        c.le("K_upper_chain_margin", worst_upper, 0.0, SPECTRAL_TOL);
        if n > r {
            c.le("K_lower_chain_margin", worst_lower, 0.0, SPECTRAL_TOL);
        }
    } else {
        c.note("trivial_empty", 0.0);
    }
    Ok(c.finish())
}

fn five_spectra(g: &Hypergraph) -> (Vec<f64>, Vec<f64>, Vec<f64>, Option<Vec<f64>>, Option<Vec<f64>>) {
    let a = eig_values(&adjacency_matrix(g));
    let k = eig_values(&kirchhoff(g));
    let kstar = eig_values(&dual_kirchhoff(g));
    let (l, lstar) = if all_degrees_positive(g) {
        (
            Some(eig_values(&sym_normalized(g).unwrap())),
            Some(eig_values(&dual_normalized(g).unwrap())),
        )
    } else {
        (None, None)
    };
    (a, k, kstar, l, lstar)
}

fn compare_five_spectra(c: &mut Check, g: &Hypergraph, h: &Hypergraph) {
    let (ga, gk, gkstar, gl, glstar) = five_spectra(g);
    let (ha, hk, hkstar, hl, hlstar) = five_spectra(h);
    compare_multisets(c, "cospectral_A", &ga, &ha, spectral_tol(&ga));
    compare_multisets(c, "cospectral_K", &gk, &hk, spectral_tol(&gk));
    compare_multisets(c, "cospectral_Kstar", &gkstar, &hkstar, spectral_tol(&gkstar));
    match (gl, hl, glstar, hlstar) {
        (Some(gl), Some(hl), Some(glstar), Some(hlstar)) => {
            compare_multisets(c, "cospectral_L", &gl, &hl, spectral_tol(&gl));
            compare_multisets(c, "cospectral_Lstar", &glstar, &hlstar, spectral_tol(&glstar));
        }
        _ => c.note("L_subchecks_skipped_zero_degree", 1.0),
    }
}

fn phase_diagonal(values: &[Phase]) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(values.len(), values.len());
    for (i, p) in values.iter().enumerate() {
        m.set(i, i, p.value());
    }
    m
}

/// Switching invariance: edge switchings leave A, K, L untouched; vertex
/// switchings conjugate B, A, K, L by the phase diagonal and preserve all
/// five spectra.
pub fn check_switching(g: &Hypergraph, f: &SwitchingFunction) -> Result<CheckReport> {
    let h = g.switch(f)?;
    let kind = match f.kind {
        SwitchKind::Vertex => "vertex",
        SwitchKind::Edge => "edge",
    };
    let mut c = Check::new("switching", g, &format!("{kind}|{:?}", f.values), ENTRYWISE_TOL);
    c.note(
        "kind",
        match f.kind {
            SwitchKind::Vertex => 0.0,
            SwitchKind::Edge => 1.0,
        },
    );
    match f.kind {
        SwitchKind::Edge => {
            // omega -> xi^{-1} omega, so B picks up the adjoint diagonal
            let dm = phase_diagonal(&f.values);
            let dm_adj = dm.adjoint();
            c.le(
                "B_switched_vs_B_Dm_adj",
                incidence_matrix(&h).max_abs_diff(&incidence_matrix(g).matmul(&dm_adj)),
                0.0,
                ENTRYWISE_TOL,
            );
            c.le(
                "A_unchanged",
                adjacency_matrix(&h).max_abs_diff(&adjacency_matrix(g)),
                0.0,
                ENTRYWISE_TOL,
            );
            c.le(
                "K_unchanged",
                kirchhoff(&h).max_abs_diff(&kirchhoff(g)),
                0.0,
                ENTRYWISE_TOL,
            );
            if all_degrees_positive(g) {
                c.le(
                    "L_unchanged",
                    normalized(&h).unwrap().max_abs_diff(&normalized(g).unwrap()),
                    0.0,
                    ENTRYWISE_TOL,
                );
                let lstar = dual_normalized(g).unwrap();
                let conj = dm.matmul(&lstar).matmul(&dm_adj);
                c.le(
                    "Lstar_switched_vs_conjugated",
                    dual_normalized(&h).unwrap().max_abs_diff(&conj),
                    0.0,
                    ENTRYWISE_TOL,
                );
            } else {
                c.note("L_subchecks_skipped_zero_degree", 1.0);
            }
        }
        SwitchKind::Vertex => {
            let dn = phase_diagonal(&f.values);
            let dn_adj = dn.adjoint();
            c.le(
                "B_switched_vs_Dn_adj_B",
                incidence_matrix(&h).max_abs_diff(&dn_adj.matmul(&incidence_matrix(g))),
                0.0,
                ENTRYWISE_TOL,
            );
            c.le(
                "A_switched_vs_conjugated",
                adjacency_matrix(&h)
                    .max_abs_diff(&dn_adj.matmul(&adjacency_matrix(g)).matmul(&dn)),
                0.0,
                ENTRYWISE_TOL,
            );
            c.le(
                "K_switched_vs_conjugated",
                kirchhoff(&h).max_abs_diff(&dn_adj.matmul(&kirchhoff(g)).matmul(&dn)),
                0.0,
                ENTRYWISE_TOL,
            );
            c.le(
                "Kstar_unchanged",
                dual_kirchhoff(&h).max_abs_diff(&dual_kirchhoff(g)),
                0.0,
                ENTRYWISE_TOL,
            );
            if all_degrees_positive(g) {
                c.le(
                    "L_switched_vs_conjugated",
                    normalized(&h)
                        .unwrap()
                        .max_abs_diff(&dn_adj.matmul(&normalized(g).unwrap()).matmul(&dn)),
                    0.0,
                    ENTRYWISE_TOL,
                );
            } else {
                c.note("L_subchecks_skipped_zero_degree", 1.0);
            }
            compare_five_spectra(&mut c, g, &h);
        }
    }
    Ok(c.finish())
}

/// All eigenvalue bounds of the smallest/largest-eigenvalue section.
pub fn bound_report(g: &Hypergraph) -> BoundReport {
    let profile = g.degree_profile();
    let delta = profile.max_degree;
    let nabla = profile.max_size;
    let mut verdicts: Vec<(String, Verdict)> = vec![];
    let inputs_digest = digest(g, "bounds");

    if g.vertex_count() == 0 {
        return BoundReport {
            inputs_digest,
            delta,
            nabla,
            is_regular: profile.is_regular,
            is_uniform: profile.is_uniform,
            rho_a: 0.0,
            gershgorin_a: 0.0,
            lambda_max_k: 0.0,
            lambda_max_k_underlying: 0.0,
            lambda_max_l: None,
            lambda_max_l_underlying: None,
            alpha: Some(0),
            alpha_witness: Some(vec![]),
            vol_ratio: None,
            verdicts: vec![(
                "all".into(),
                Verdict::Skipped("empty hypergraph".into()),
            )],
        };
    }

    let a = adjacency_matrix(g);
    let spec_a = spectrum_of(&a, false);
    let rho_a = spectral_radius(&spec_a);
    let gershgorin_a = gershgorin_bound(&a).unwrap();
    let spec_k = eig_values(&kirchhoff(g));
    let lambda_max_k = *spec_k.last().unwrap();
    let underlying = g.underlying();
    let spec_k_u = eig_values(&kirchhoff(&underlying));
    let lambda_max_k_underlying = *spec_k_u.last().unwrap();

    let verdict_le = |lhs: f64, rhs: f64| {
        if lhs <= rhs + SPECTRAL_TOL {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    };

    verdicts.push((
        "rho_A_le_delta_times_nabla_minus_1".into(),
        verdict_le(rho_a, delta as f64 * (nabla as f64 - 1.0)),
    ));
    verdicts.push((
        "gershgorin_ge_rho_A".into(),
        verdict_le(rho_a, gershgorin_a + 1e-9),
    ));
    verdicts.push((
        "lambda_max_K_le_underlying".into(),
        verdict_le(lambda_max_k, lambda_max_k_underlying),
    ));
    verdicts.push((
        "lambda_max_K_underlying_le_nabla_delta".into(),
        verdict_le(lambda_max_k_underlying, (nabla * delta) as f64),
    ));
    let k_equality = (lambda_max_k_underlying - (nabla * delta) as f64).abs() <= SPECTRAL_TOL;
    verdicts.push((
        "K_equality_iff_regular_and_uniform".into(),
        if k_equality == (profile.is_regular && profile.is_uniform) {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
    ));
    verdicts.push((
        "max_delta_nabla_le_lambda_max_K".into(),
        verdict_le(delta.max(nabla) as f64, lambda_max_k),
    ));

    let (lambda_max_l, lambda_max_l_underlying) = if all_degrees_positive(g) {
        let spec_l = eig_values(&sym_normalized(g).unwrap());
        let spec_l_u = eig_values(&sym_normalized(&underlying).unwrap());
        let lmax = *spec_l.last().unwrap();
        let lmax_u = *spec_l_u.last().unwrap();
        verdicts.push((
            "lambda_max_L_le_underlying".into(),
            verdict_le(lmax, lmax_u),
        ));
        verdicts.push((
            "lambda_max_L_underlying_le_nabla".into(),
            verdict_le(lmax_u, nabla as f64),
        ));
        let l_equality = (lmax_u - nabla as f64).abs() <= SPECTRAL_TOL;
        verdicts.push((
            "L_equality_iff_uniform".into(),
            if l_equality == profile.is_uniform {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
        ));
        (Some(lmax), Some(lmax_u))
    } else {
        verdicts.push((
            "L_bounds".into(),
            Verdict::Skipped("zero-degree vertex: L undefined".into()),
        ));
        (None, None)
    };

    let (alpha, alpha_witness, vol_ratio) = match g.independence_number() {
        Ok((alpha, witness)) => {
            let ratio = if alpha > 0 {
                let degrees = g.degrees();
                let vol_s: usize = witness.iter().map(|&v| degrees[v]).sum();
                let ratio = vol_s as f64 / alpha as f64;
                verdicts.push((
                    "vol_ratio_le_lambda_max_K".into(),
                    verdict_le(ratio, lambda_max_k),
                ));
                Some(ratio)
            } else {
                None
            };
            (Some(alpha), Some(witness), ratio)
        }
        Err(_) => {
            verdicts.push((
                "vol_ratio_le_lambda_max_K".into(),
                Verdict::Skipped("too many vertices for brute-force independence".into()),
            ));
            (None, None, None)
        }
    };

    BoundReport {
        inputs_digest,
        delta,
        nabla,
        is_regular: profile.is_regular,
        is_uniform: profile.is_uniform,
        rho_a,
        gershgorin_a,
        lambda_max_k,
        lambda_max_k_underlying,
        lambda_max_l,
        lambda_max_l_underlying,
        alpha,
        alpha_witness,
        vol_ratio,
        verdicts,
    }
}

/// Rayleigh sandwich for a constant-phase vertex set S:
/// lambda_1(K) <= sum_e |e cap S|^2 / |S| <= lambda_n(K), and the analogous
/// L statement with vol S.
pub fn check_constant_phase_set(g: &Hypergraph, s: &[usize]) -> Result<CheckReport> {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::BadParameter("S must be nonempty".into()));
    }
    let n = g.vertex_count();
    if let Some(&bad) = set.iter().find(|&&v| v >= n) {
        return Err(Error::BadVertexIndex { index: bad, n });
    }
    let extra = format!("S={:?}", set);
    // hypothesis: each v in S carries one phase across all its incidences
    for &v in &set {
        let mut first: Option<Phase> = None;
        for e in 0..g.edge_count() {
            if let Some(p) = g.phase(v, e) {
                match first {
                    None => first = Some(p),
                    Some(q) => {
                        if p.dist(q) > 1e-12 {
                            return Ok(skipped(
                                "constant_phase_set",
                                g,
                                &extra,
                                "phase hypothesis not satisfied",
                            ));
                        }
                    }
                }
            }
        }
    }

    let mut c = Check::new("constant_phase_set", g, &extra, SPECTRAL_TOL);
    let intersect_sq: usize = g
        .edges()
        .iter()
        .map(|edge| {
            let k = edge.keys().filter(|v| set.contains(v)).count();
            k * k
        })
        .sum();
    let spec_k = eig_values(&kirchhoff(g));
    let ratio_k = intersect_sq as f64 / set.len() as f64;
    c.note("sum_e_cap_S_sq_over_S", ratio_k);
    c.le("K_lower", spec_k[0], ratio_k, SPECTRAL_TOL);
    c.le("K_upper", ratio_k, *spec_k.last().unwrap(), SPECTRAL_TOL);

    if all_degrees_positive(g) {
        let degrees = g.degrees();
        let vol_s: usize = set.iter().map(|&v| degrees[v]).sum();
        let spec_l = eig_values(&sym_normalized(g).unwrap());
        let ratio_l = intersect_sq as f64 / vol_s as f64;
        c.note("sum_e_cap_S_sq_over_volS", ratio_l);
        c.le("L_lower", spec_l[0], ratio_l, SPECTRAL_TOL);
        c.le("L_upper", ratio_l, *spec_l.last().unwrap(), SPECTRAL_TOL);
    } else {
        c.note("L_subcheck_skipped_zero_degree", 1.0);
    }
    Ok(c.finish())
}

/// Independence bounds: vol S / |S| <= lambda_n(K) for the maximum
/// independent set, and the eigenvalue-counting bounds on alpha for L and A.
pub fn check_independence_bounds(g: &Hypergraph) -> Result<CheckReport> {
    let (alpha, witness) = g.independence_number()?;
    let mut c = Check::new("independence_bounds", g, "", SPECTRAL_TOL);
    c.note("alpha", alpha as f64);
    if g.vertex_count() == 0 {
        return Ok(c.finish());
    }

    let spec_k = eig_values(&kirchhoff(g));
    let lambda_max_k = *spec_k.last().unwrap();
    if alpha > 0 {
        let degrees = g.degrees();
        let vol_s: usize = witness.iter().map(|&v| degrees[v]).sum();
        c.le(
            "vol_ratio_le_lambda_max_K",
            vol_s as f64 / alpha as f64,
            lambda_max_k,
            SPECTRAL_TOL,
        );
    }

    // boundary eigenvalues count on both sides, matching the non-strict
    // inequalities
    let spec_a = eig_values(&adjacency_matrix(g));
    let below = spec_a.iter().filter(|&&l| l <= SPECTRAL_TOL).count();
    let above = spec_a.iter().filter(|&&l| l >= -SPECTRAL_TOL).count();
    c.le(
        "alpha_le_A_count_bound",
        alpha as f64,
        below.min(above) as f64,
        0.0,
    );

    if all_degrees_positive(g) {
        let spec_l = eig_values(&sym_normalized(g).unwrap());
        let below = spec_l.iter().filter(|&&l| l <= 1.0 + SPECTRAL_TOL).count();
        let above = spec_l.iter().filter(|&&l| l >= 1.0 - SPECTRAL_TOL).count();
        c.le(
            "alpha_le_L_count_bound",
            alpha as f64,
            below.min(above) as f64,
            0.0,
        );
    } else {
        c.note("L_subcheck_skipped_zero_degree", 1.0);
    }
    Ok(c.finish())
}

fn fold_reports(
    name: &str,
    g: &Hypergraph,
    parts: &[CheckReport],
    tolerance: f64,
) -> CheckReport {
    let failures = parts.iter().filter(|r| r.verdict.is_fail()).count();
    let skipped_count = parts
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::Skipped(_)))
        .count();
    CheckReport {
        check_name: name.to_string(),
        inputs_digest: digest(g, name),
        measured: vec![
            Measurement {
                label: "cases".into(),
                value: parts.len() as f64,
            },
            Measurement {
                label: "failures".into(),
                value: failures as f64,
            },
            Measurement {
                label: "skipped".into(),
                value: skipped_count as f64,
            },
        ],
        tolerance,
        verdict: if failures == 0 { Verdict::Pass } else { Verdict::Fail },
    }
}

/// Run every check on one hypergraph. Deletion and switching samples are
/// drawn deterministically from `seed`; single deletions are exhaustive.
/// The suite never aborts on a failed check.
pub fn run_full_suite(g: &Hypergraph, seed: u64) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut reports = vec![
        check_operator_identities(g, seed),
        check_trace_identities(g),
        check_dual_spectra(g),
        check_kernels(g),
        check_regular_equivalence(g),
        check_regular_uniform_dual_l(g),
    ];

    // weak vertex deletion: every single vertex, plus one random larger set
    if n >= 2 {
        let singles: Vec<CheckReport> = (0..n)
            .map(|v| check_vertex_deletion_interlacing(g, &[v]).unwrap())
            .collect();
        reports.push(fold_reports(
            "interlacing_vertex_single_deletions",
            g,
            &singles,
            SPECTRAL_TOL,
        ));
    } else {
        reports.push(skipped(
            "interlacing_vertex_single_deletions",
            g,
            "",
            "fewer than two vertices",
        ));
    }
    if n >= 3 {
        let r = rng.gen_range(2..n);
        let mut s: Vec<usize> = (0..n).collect();
        for i in (1..s.len()).rev() {
            s.swap(i, rng.gen_range(0..=i));
        }
        s.truncate(r);
        reports.push(check_vertex_deletion_interlacing(g, &s).unwrap());
    }

    // weak edge deletion: every single edge, plus one random larger set
    if m >= 1 {
        let singles: Vec<CheckReport> = (0..m)
            .map(|e| check_edge_deletion_interlacing(g, &[e]).unwrap())
            .collect();
        reports.push(fold_reports(
            "interlacing_edge_single_deletions",
            g,
            &singles,
            SPECTRAL_TOL,
        ));
        if m >= 2 {
            let r = rng.gen_range(2..=m);
            let mut f: Vec<usize> = (0..m).collect();
            for i in (1..f.len()).rev() {
                f.swap(i, rng.gen_range(0..=i));
            }
            f.truncate(r);
            reports.push(check_edge_deletion_interlacing(g, &f).unwrap());
        }
    } else {
        reports.push(skipped(
            "interlacing_edge_single_deletions",
            g,
            "",
            "no edges",
        ));
    }

    // switchings: random vertex, random edge, and their composition
    let zeta = SwitchingFunction::vertex(random_unit_phases(&mut rng, n));
    let xi = SwitchingFunction::edge(random_unit_phases(&mut rng, m));
    reports.push(check_switching(g, &zeta).unwrap());
    reports.push(check_switching(g, &xi).unwrap());
    {
        let composed = g.switch(&xi).unwrap().switch(&zeta).unwrap();
        let mut c = Check::new("switching_composed", g, "", SPECTRAL_TOL);
        compare_five_spectra(&mut c, g, &composed);
        reports.push(c.finish());
    }

    if n == 0 || g.degree_profile().max_size == 0 {
        reports.push(skipped("bounds", g, "", "no vertices or no incidences"));
    } else {
        reports.push(bound_report(g).to_check_report());
    }

    // constant-phase sets: every singleton (hypothesis always holds) plus
    // the full vertex set when its hypothesis holds
    if n >= 1 && n <= 16 {
        let mut parts: Vec<CheckReport> = (0..n)
            .map(|v| check_constant_phase_set(g, &[v]).unwrap())
            .collect();
        let all: Vec<usize> = (0..n).collect();
        parts.push(check_constant_phase_set(g, &all).unwrap());
        reports.push(fold_reports("constant_phase_sets", g, &parts, SPECTRAL_TOL));
    } else {
        reports.push(skipped(
            "constant_phase_sets",
            g,
            "",
            "no vertices or too many for the sampled sets",
        ));
    }

    match check_independence_bounds(g) {
        Ok(report) => reports.push(report),
        Err(_) => reports.push(skipped(
            "independence_bounds",
            g,
            "",
            "too many vertices for brute force",
        )),
    }

    reports.sort_by(|a, b| {
        a.check_name
            .cmp(&b.check_name)
            .then(a.inputs_digest.cmp(&b.inputs_digest))
    });
    reports
}

/// (passed, failed, skipped) counts for a report list.
pub fn summarize(reports: &[CheckReport]) -> (usize, usize, usize) {
    let passed = reports.iter().filter(|r| r.verdict.is_pass()).count();
    let failed = reports.iter().filter(|r| r.verdict.is_fail()).count();
    (passed, failed, reports.len() - passed - failed)
}
