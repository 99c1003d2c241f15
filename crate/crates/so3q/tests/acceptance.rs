//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use so3q::geom::{
    basis_phi, curve_operator_geom, gram_matrix, heisenberg_residuals, intertwining_residual, modular_phase_check,
    unnormalized_norm_sq, FrameGenerator, QuantizationContext,
};
use so3q::jones::{jones_at_root, Backend, KnotPresentation};
use so3q::knot_state::{
    figure_eight_volume, knot_state, l2_norm_formula, quadrature_norm_sq, volume_sequence, VolumeRow,
};
use so3q::skein::RootContext;
use so3q::tqft::{
    curve_operator_skein, kirby_constants, projective_deviation, rt_invariant, sl2z_rep, CMatrix, MappingClassWord,
};
use so3q::Result;

type Criterion = fn() -> Result<Outcome>;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { passed, detail })
}

fn taus() -> [Complex64; 2] {
    [Complex64::new(0.0, 1.0), Complex64::new(0.3, 1.7)]
}

fn sorted_eigs(m: &CMatrix) -> Vec<f64> {
    let mut v: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

fn spectra() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for r in 3..=10u32 {
        let n = (2 * r + 1) as f64;
        let mut want: Vec<f64> = (0..r).map(|k| -2.0 * (2.0 * (k + 1) as f64 * PI / n).cos()).collect();
        want.sort_by(f64::total_cmp);
        let ctx = QuantizationContext::new(r, taus()[0])?;
        for m in [curve_operator_skein(1, 0, r)?, curve_operator_geom(1, 0, &ctx)?] {
            for (a, b) in sorted_eigs(&m).iter().zip(&want) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    outcome(
        worst < 1e-10,
        format!("max eigenvalue deviation {worst:.2e} (r = 3..10, skein and geometric)"),
    )
}

fn intertwining() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for r in 3..=8 {
        for tau in taus() {
            let ctx = QuantizationContext::new(r, tau)?;
            for (a, b) in [(1, 0), (0, 1), (1, 1)] {
                worst = worst.max(intertwining_residual(&ctx, a, b)?);
            }
        }
    }
    outcome(
        worst < 1e-8,
        format!("max operator-norm residual {worst:.2e} (r = 3..8, two tau)"),
    )
}

fn orthonormality() -> Result<Outcome> {
    let (mut gram, mut norm) = (0.0f64, 0.0f64);
    for r in 3..=6 {
        for tau in taus() {
            let ctx = QuantizationContext::new(r, tau)?;
            let phis = basis_phi(&ctx);
            let g = gram_matrix(&phis, &phis)?;
            let id = CMatrix::identity(r as usize, r as usize);
            gram = gram.max((g - id).iter().map(|z| z.norm()).fold(0.0, f64::max));
            let want = (8.0 * PI * PI / ((2 * r + 1) as f64 * tau.im)).sqrt();
            norm = norm.max((unnormalized_norm_sq(&ctx)? - want).abs() / want);
        }
    }
    outcome(
        gram < 1e-6 && norm < 1e-8,
        format!("Gram entrywise error {gram:.2e}, unnormalized norm relative error {norm:.2e}"),
    )
}

fn heisenberg() -> Result<Outcome> {
    let (mut i, mut ii) = (0.0f64, 0.0f64);
    for r in 3..=8 {
        for tau in taus() {
            let (a, b) = heisenberg_residuals(&QuantizationContext::new(r, tau)?)?;
            i = i.max(a);
            ii = ii.max(b);
        }
    }
    outcome(
        i < 1e-10 && ii < 1e-10,
        format!("frame-fixed {i:.2e}, commutation {ii:.2e} (r = 3..8)"),
    )
}

fn modular() -> Result<Outcome> {
    let (mut proj, mut space, mut literal) = (0.0f64, 0.0f64, 0.0f64);
    let mut phases = Vec::new();
    for r in 3..=6 {
        for tau in taus() {
            let ctx = QuantizationContext::new(r, tau)?;
            for gen in [FrameGenerator::T, FrameGenerator::S] {
                let rep = modular_phase_check(gen, &ctx)?;
                proj = proj.max(rep.projective_deviation);
                space = space.max(rep.in_space_residual);
                if gen == FrameGenerator::T {
                    literal = literal.max(rep.literal_deviation);
                }
                if r == 3 && tau.re == 0.0 {
                    phases.push(format!("{gen}: {:.6}{:+.6}i", rep.global_phase.re, rep.global_phase.im));
                }
            }
        }
    }
    outcome(
        proj < 1e-6 && space < 1e-6,
        format!(
            "up to one unit phase per generator: deviation {proj:.2e}, off-space {space:.2e}; \
             phases at r = 3 [{}]; literal T-phase deviation {literal:.2e} (info)",
            phases.join(", ")
        ),
    )
}

fn sl2z_relations() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for r in 3..=16 {
        let st3 = sl2z_rep(&"S T S T S T".parse::<MappingClassWord>()?, r)?;
        let s2 = sl2z_rep(&"S S".parse::<MappingClassWord>()?, r)?;
        let s4 = sl2z_rep(&"S^4".parse::<MappingClassWord>()?, r)?;
        let id = CMatrix::identity(r as usize, r as usize);
        worst = worst.max(projective_deviation(&st3, &s2).1);
        worst = worst.max(projective_deviation(&s4, &id).1);
    }
    outcome(
        worst < 1e-10,
        format!("max phase-normalized deviation {worst:.2e} (r = 3..16)"),
    )
}

fn cross_oracle() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for name in ["trefoil", "figure-eight"] {
        let k = KnotPresentation::catalog(name)?;
        for r in 3..=8 {
            let ctx = RootContext::new(r)?;
            for n in 1..=3 {
                let v = [Backend::Exact, Backend::RMatrix, Backend::Catalog].map(|b| jones_at_root(&k, n, &ctx, b));
                let v = [v[0].clone()?, v[1].clone()?, v[2].clone()?];
                for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                    worst = worst.max((v[i] - v[j]).norm());
                }
            }
        }
    }
    outcome(
        worst < 1e-9,
        format!("max pairwise difference {worst:.2e} (n <= 3, r = 3..8)"),
    )
}

fn rt_sanity() -> Result<Outcome> {
    let u = KnotPresentation::unknot();
    let (mut s3, mut s2s1) = (0.0f64, 0.0f64);
    for r in 3..=8 {
        let ways = [
            rt_invariant(None, 0, r, Backend::Catalog)?,
            rt_invariant(Some(&u), 1, r, Backend::Catalog)?,
            rt_invariant(Some(&u), -1, r, Backend::Exact)?,
            Complex64::new(kirby_constants(r)?.eta, 0.0),
        ];
        for w in &ways[1..] {
            s3 = s3.max((w - ways[0]).norm());
        }
        s2s1 = s2s1.max((rt_invariant(Some(&u), 0, r, Backend::Catalog)? - 1.0).norm());
    }
    outcome(
        s3 < 1e-9 && s2s1 < 1e-9,
        format!("S^3 spread {s3:.2e}, |<S^2 x S^1> - 1| {s2s1:.2e} (r = 3..8)"),
    )
}

fn rows_text(rows: &[VolumeRow]) -> String {
    rows.iter()
        .map(|w| format!("v_{} = {:.6}", w.r, w.v_r))
        .collect::<Vec<_>>()
        .join(", ")
}

fn volume_trend() -> Result<Outcome> {
    let grid = [50, 100, 200, 500];
    let vol = figure_eight_volume();
    let fig8 = volume_sequence(
        &KnotPresentation::catalog("figure-eight")?,
        &grid,
        Backend::Catalog,
        53,
        vol,
    )?;
    let increasing = fig8.windows(2).all(|w| w[1].v_r > w[0].v_r);
    let gaps: Vec<f64> = fig8.iter().map(|w| (w.v_r - vol).abs()).collect();
    let shrinking = gaps.windows(2).all(|g| g[1] < g[0]);
    let close = gaps[3] < 0.35;
    let tref = volume_sequence(&KnotPresentation::catalog("trefoil")?, &grid, Backend::Catalog, 53, 0.0)?;
    let tref_small = tref[3].v_r < 0.25;
    let tref_dec = tref.windows(2).all(|w| w[1].v_r < w[0].v_r);
    outcome(
        increasing && shrinking && close && tref_small && tref_dec,
        format!(
            "figure-eight [{}] increasing={increasing} gap shrinking={shrinking} |v_500 - {vol:.6}| = {:.4} < 0.35: {close}; \
             trefoil [{}] v_500 < 0.25: {tref_small} decreasing={tref_dec}",
            rows_text(&fig8),
            gaps[3],
            rows_text(&tref)
        ),
    )
}

fn argmax_observation() -> Result<Outcome> {
    let rows = volume_sequence(
        &KnotPresentation::catalog("figure-eight")?,
        &[50, 100],
        Backend::Catalog,
        53,
        figure_eight_volume(),
    )?;
    let ok = rows.iter().all(|w| w.argmax_n == w.r);
    let text: Vec<String> = rows
        .iter()
        .map(|w| format!("r = {}: argmax {}", w.r, w.argmax_n))
        .collect();
    outcome(ok, text.join(", "))
}

fn parseval() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for name in ["unknot", "trefoil", "figure-eight"] {
        let k = KnotPresentation::catalog(name)?;
        for r in 3..=6 {
            let formula = l2_norm_formula(&k, r, Backend::Catalog)?.norm_sq;
            let quad = quadrature_norm_sq(&knot_state(&k, r, Backend::Catalog)?)?;
            worst = worst.max((quad - formula).abs() / formula);
        }
    }
    outcome(
        worst < 1e-6,
        format!("max relative error {worst:.2e} (r = 3..6, catalog knots)"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("curve-operator spectra", spectra),
        ("intertwining", intertwining),
        ("theta basis orthonormality", orthonormality),
        ("Heisenberg identities", heisenberg),
        ("modular frame changes", modular),
        ("projective SL(2,Z) relations", sl2z_relations),
        ("backend cross-oracle", cross_oracle),
        ("RT sanity", rt_sanity),
        ("volume-conjecture trend", volume_trend),
        ("max-color observation", argmax_observation),
        ("norm consistency", parseval),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (passed, detail) = match run() {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !passed {
            failures += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {detail} [{:.1}s]",
            i + 1,
            if passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
