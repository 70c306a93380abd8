//! The CLI verbs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use monodromy_core::lift::{compare_paths_with, lift_path_traced, lift_path_with, monodromy_with};
use monodromy_core::linalg::reconstruct;
use monodromy_core::sampling::random_winding_loop;
use monodromy_core::spin::{
    analytic_bloch, analytic_eigenphases, bloch_projector, preset_paths, projector_to_bloch,
};
use monodromy_core::{
    adiabatic::convergence_scan_with, frame::circular_distance, predict_monodromy, winding_number, EigenFrame,
    Error, FamilyKind, FieldPoint, Order, Path, Permutation, SpectralFamily,
};
use num_complex::Complex64;

use crate::config::{build_model, point, JobConfig, Model, PathResolver};
use crate::error::CliError;
use crate::report::*;

/// What a command produced. A theorem violation still carries its report.
#[derive(Debug)]
pub struct Outcome {
    pub report: RunReport,
    pub table: Option<Table>,
    pub violation: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Decompose,
    Lift,
    Monodromy,
    Compare,
    Verify,
    Sweep,
    Presets,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Decompose => "decompose",
            Command::Lift => "lift",
            Command::Monodromy => "monodromy",
            Command::Compare => "compare",
            Command::Verify => "verify",
            Command::Sweep => "sweep",
            Command::Presets => "presets",
        }
    }
}

pub fn run(command: Command, config: &JobConfig) -> Result<Outcome, CliError> {
    let model = build_model(&config.model)?;
    let paths = PathResolver::new(&config.paths);
    let (result, table, violation) = match command {
        Command::Decompose => decompose(config, &model)?,
        Command::Lift => lift(config, &model, &paths)?,
        Command::Monodromy => monodromy(config, &model, &paths)?,
        Command::Compare => compare(config, &model, &paths)?,
        Command::Verify => verify(config, &model, &paths)?,
        Command::Sweep => sweep(config, &model)?,
        Command::Presets => presets()?,
    };
    Ok(Outcome { report: RunReport::new(command.name(), config, result), table, violation })
}

type Produced = (CommandResult, Option<Table>, Option<String>);

fn start_frame(family: &dyn SpectralFamily, path: &Path, gap_min: f64) -> Result<EigenFrame, CliError> {
    Ok(monodromy_core::frame::frame_at_with_gap(family, path.start(), Order::ByEigenvalue, gap_min)?)
}

fn bloch_of(frame: &EigenFrame) -> Option<Vec<[f64; 3]>> {
    if frame.size() != 2 {
        return None;
    }
    frame.projectors().iter().map(|p| projector_to_bloch(p).ok().map(|b| b.components())).collect()
}

fn windings(model: &Model, path: &Path) -> Result<Vec<i64>, CliError> {
    let punctures = model.family().punctures();
    Ok(punctures.iter().map(|p| winding_number(path, p)).collect::<Result<Vec<_>, Error>>()?)
}

fn predicted(model: &Model, windings: &[i64]) -> Result<Option<Permutation>, CliError> {
    match model.generators() {
        Some(g) => Ok(Some(predict_monodromy(windings, &g)?)),
        None => Ok(None),
    }
}

fn decompose(config: &JobConfig, model: &Model) -> Result<Produced, CliError> {
    let family = model.family();
    let mut rows = Vec::new();
    let mut table = Table::new(&["point", "eigenvalues", "min_gap", "reconstruction_residual"]);
    for coords in &config.decompose.points {
        let p = point(coords)?;
        // closed-form values first: they carry the more specific diagnostics
        let analytic = if model.is_spin() {
            let field = FieldPoint::from_parameter(&p)?;
            let phases = analytic_eigenphases(field)?;
            Some((phases, analytic_bloch(field)?))
        } else {
            None
        };
        let frame = monodromy_core::frame::frame_at_with_gap(
            family,
            &p,
            Order::ByEigenvalue,
            config.lift_options.gap_min,
        )?;
        let floquet = frame.kind() == FamilyKind::Floquet;
        let values: Vec<Complex64> = frame
            .eigenvalues()
            .iter()
            .map(|&t| if floquet { Complex64::from_polar(1.0, t) } else { Complex64::new(t, 0.0) })
            .collect();
        let residual = reconstruct(&values, frame.projectors()).max_abs_diff(&family.evaluate(&p)?);

        let (mut phase_res, mut proj_res) = (None, None);
        if let Some(((th_plus, th_minus), a)) = analytic {
            let targets = [(th_plus, bloch_projector(a)), (th_minus, bloch_projector(-a))];
            let (mut dp, mut dq): (f64, f64) = (0.0, 0.0);
            for (&theta, proj) in frame.eigenvalues().iter().zip(frame.projectors()) {
                let (t, q) = targets
                    .iter()
                    .min_by(|x, y| circular_distance(theta, x.0).total_cmp(&circular_distance(theta, y.0)))
                    .unwrap();
                dp = dp.max(circular_distance(theta, *t));
                dq = dq.max(proj.matrix().max_abs_diff(q.matrix()));
            }
            phase_res = Some(dp);
            proj_res = Some(dq);
        }

        table.push(vec![
            coords.iter().map(|&x| float(x)).collect::<Vec<_>>().join(" "),
            frame.eigenvalues().iter().map(|&x| float(x)).collect::<Vec<_>>().join(" "),
            float(frame.min_gap()),
            float(residual),
        ]);
        rows.push(DecomposeRow {
            point: coords.clone(),
            eigenvalues: frame.eigenvalues().to_vec(),
            unit_eigenvalues: floquet.then(|| values.iter().map(|z| [z.re, z.im]).collect()),
            bloch: bloch_of(&frame),
            min_gap: frame.min_gap(),
            reconstruction_residual: residual,
            analytic_eigenphases: analytic.map(|((a, b), _)| [a, b]),
            phase_residual: phase_res,
            projector_residual: proj_res,
        });
    }
    Ok((CommandResult::Decompose(rows), Some(table), None))
}

fn lift(config: &JobConfig, model: &Model, paths: &PathResolver) -> Result<Produced, CliError> {
    let family = model.family();
    let path = paths.resolve(&config.lift.path)?;
    let mut initial = start_frame(family, &path, config.lift_options.gap_min)?;
    let order = match &config.lift.initial_order {
        Some(images) => {
            let sigma =
                Permutation::new(images.clone()).map_err(|e| CliError::Config(format!("initial_order: {e}")))?;
            if sigma.len() != initial.size() {
                return Err(CliError::Config("initial_order has the wrong length".into()));
            }
            initial = initial.permuted(&sigma)?;
            sigma
        }
        None => Permutation::identity(initial.size()),
    };
    let (result, trace) = lift_path_traced(family, &path, &initial, config.lift_options)?;

    let two_level = family.size() == 2 && family.parameter_dim() == 2;
    let mut table = if two_level {
        Table::new(&["s", "Bx", "By", "a_x", "a_y", "a_z", "min_gap"])
    } else {
        let mut cols = vec!["s".to_string()];
        cols.extend((0..family.parameter_dim()).map(|i| format!("lambda_{i}")));
        cols.push("min_gap".into());
        Table { header: cols, rows: Vec::new() }
    };
    for step in &trace {
        let mut row = vec![float(step.arclength)];
        row.extend(step.point.coords().iter().map(|&x| float(x)));
        if two_level {
            let a = projector_to_bloch(&step.frame.projectors()[0])?.components();
            row.extend(a.iter().map(|&x| float(x)));
        }
        row.push(float(step.gap));
        table.push(row);
    }

    let report = LiftReport {
        path: config.lift.path.clone(),
        samples: path.samples().len(),
        length: path.length(),
        initial_order: order.images().to_vec(),
        permutation: result.permutation.images().to_vec(),
        final_eigenvalues: result.final_frame.eigenvalues().to_vec(),
        final_bloch: bloch_of(&result.final_frame),
        steps_used: result.steps_used,
        min_gap_seen: result.min_gap_seen,
        min_overlap_seen: result.min_overlap_seen,
        trajectory_rows: table.rows.len(),
    };
    Ok((CommandResult::Lift(report), Some(table), None))
}

fn monodromy(config: &JobConfig, model: &Model, paths: &PathResolver) -> Result<Produced, CliError> {
    let family = model.family();
    let mut rows = Vec::new();
    let mut table = Table::new(&["path", "permutation", "windings", "predicted"]);
    for name in &config.monodromy.loops {
        let path = paths.resolve(name)?;
        if !path.is_closed() {
            return Err(CliError::Config(format!("path '{name}' is not closed")));
        }
        let initial = start_frame(family, &path, config.lift_options.gap_min)?;
        let lift = lift_path_with(family, &path, &initial, config.lift_options)?;
        let w = windings(model, &path)?;
        let pred = predicted(model, &w)?;
        table.push(vec![
            name.clone(),
            perm_cell(lift.permutation.images()),
            w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
            pred.as_ref().map(|p| perm_cell(p.images())).unwrap_or_default(),
        ]);
        rows.push(MonodromyRow {
            path: name.clone(),
            permutation: lift.permutation.images().to_vec(),
            windings: w,
            predicted: pred.map(|p| p.images().to_vec()),
            steps_used: lift.steps_used,
            min_gap_seen: lift.min_gap_seen,
        });
    }
    Ok((CommandResult::Monodromy(rows), Some(table), None))
}

fn compare(config: &JobConfig, model: &Model, paths: &PathResolver) -> Result<Produced, CliError> {
    let family = model.family();
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut table = Table::new(&["first", "second", "discrepancy", "composite_monodromy", "predicted"]);
    for (a, b) in &config.compare.pairs {
        let (c1, c2) = (paths.resolve(a)?, paths.resolve(b)?);
        let initial = start_frame(family, &c1, config.lift_options.gap_min)?;
        let cmp = compare_paths_with(family, &c1, &c2, &initial, config.lift_options)?;
        let w = windings(model, &cmp.composite_loop)?;
        let pred = predicted(model, &w)?;
        let composition_holds = cmp.is_consistent();
        let prediction_holds = pred.as_ref().map(|p| *p == cmp.discrepancy);
        if !composition_holds {
            violations.push(format!(
                "{a} vs {b}: discrepancy {} but composite-loop monodromy {}",
                perm_cell(cmp.discrepancy.images()),
                perm_cell(cmp.composite_monodromy.images())
            ));
        }
        if prediction_holds == Some(false) {
            violations.push(format!(
                "{a} vs {b}: discrepancy {} but winding prediction {}",
                perm_cell(cmp.discrepancy.images()),
                perm_cell(pred.as_ref().unwrap().images())
            ));
        }
        table.push(vec![
            a.clone(),
            b.clone(),
            perm_cell(cmp.discrepancy.images()),
            perm_cell(cmp.composite_monodromy.images()),
            pred.as_ref().map(|p| perm_cell(p.images())).unwrap_or_default(),
        ]);
        rows.push(CompareRow {
            first: a.clone(),
            second: b.clone(),
            first_permutation: cmp.first.permutation.images().to_vec(),
            second_permutation: cmp.second.permutation.images().to_vec(),
            discrepancy: cmp.discrepancy.images().to_vec(),
            composite_monodromy: cmp.composite_monodromy.images().to_vec(),
            composite_windings: w,
            predicted: pred.map(|p| p.images().to_vec()),
            composition_holds,
            prediction_holds,
        });
    }
    let violation = (!violations.is_empty()).then(|| violations.join("; "));
    Ok((CommandResult::Compare(rows), Some(table), violation))
}

fn verify(config: &JobConfig, model: &Model, paths: &PathResolver) -> Result<Produced, CliError> {
    let family = model.family();
    let opts = &config.verify;
    let path = paths.resolve(&opts.path)?;
    let initial = start_frame(family, &path, config.lift_options.gap_min)?;
    let scan = convergence_scan_with(family, &path, &initial, opts.slot, &opts.periods, config.lift_options)?;
    let mut table = Table::new(&["M", "infidelity"]);
    for r in &scan.rows {
        table.push(vec![r.periods.to_string(), float(r.infidelity)]);
    }
    let agrees = scan.agrees_with_lift();
    let violation = (!agrees).then(|| {
        format!(
            "evolved state ends in slot {} (fidelity {:.6}) but the lift predicts slot {}",
            scan.selected_slot, scan.selected_fidelity, scan.slot
        )
    });
    let report = VerifyReport {
        path: opts.path.clone(),
        slot: opts.slot,
        rows: scan.rows.iter().map(|r| ScanEntry { periods: r.periods, infidelity: r.infidelity }).collect(),
        exponent: scan.exponent,
        lift_permutation: scan.lift.permutation.images().to_vec(),
        selected_slot: scan.selected_slot,
        selected_fidelity: scan.selected_fidelity,
        slot_agrees: agrees,
    };
    Ok((CommandResult::Verify(report), Some(table), violation))
}

fn sweep_one(model: &Model, config: &JobConfig, index: usize, w: i32, path: &Path) -> Result<SweepEntry, CliError> {
    let family = model.family();
    let initial = start_frame(family, path, config.lift_options.gap_min)?;
    let found = monodromy_with(family, path, &initial, config.lift_options)?;
    let windings = windings(model, path)?;
    let expected = predicted(model, &windings)?.expect("generators checked");
    Ok(SweepEntry {
        index,
        winding: i64::from(w),
        passed: found == expected,
        expected: expected.images().to_vec(),
        found: found.images().to_vec(),
    })
}

fn sweep(config: &JobConfig, model: &Model) -> Result<Produced, CliError> {
    let opts = &config.sweep;
    if model.generators().is_none() {
        return Err(CliError::Config("sweep needs monodromy generators for the model".into()));
    }
    if model.family().parameter_dim() != 2 {
        return Err(CliError::Config("sweep draws loops in a two-dimensional parameter plane".into()));
    }
    // loops are drawn sequentially so the campaign depends only on the seed
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let jobs: Vec<(i32, Path)> = (0..opts.loops).map(|_| random_winding_loop(&mut rng)).collect();

    let threads = opts.threads.max(1).min(jobs.len().max(1));
    let chunk = jobs.len().div_ceil(threads).max(1);
    let results: Vec<Result<SweepEntry, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .chunks(chunk)
            .enumerate()
            .map(|(c, part)| {
                s.spawn(move || {
                    part.iter()
                        .enumerate()
                        .map(|(k, (w, path))| sweep_one(model, config, c * chunk + k, *w, path))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    let entries = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let passed = entries.iter().filter(|e| e.passed).count();
    let failed = entries.len() - passed;
    let mut table = Table::new(&["index", "winding", "expected", "found", "passed"]);
    for e in &entries {
        table.push(vec![
            e.index.to_string(),
            e.winding.to_string(),
            perm_cell(&e.expected),
            perm_cell(&e.found),
            e.passed.to_string(),
        ]);
    }
    let violation = (failed > 0).then(|| format!("{failed} of {} loops disagree with the winding prediction", entries.len()));
    let report = SweepReport { seed: opts.seed, loops: opts.loops, passed, failed, entries };
    Ok((CommandResult::Sweep(report), Some(table), violation))
}

fn presets() -> Result<Produced, CliError> {
    let mut infos = Vec::new();
    let mut table = Table::new(&["name", "index", "Bx", "By"]);
    for (name, path) in preset_paths() {
        let points: Vec<[f64; 2]> = path.samples().iter().map(|p| [p.coords()[0], p.coords()[1]]).collect();
        for (i, p) in points.iter().enumerate() {
            table.push(vec![name.clone(), i.to_string(), float(p[0]), float(p[1])]);
        }
        infos.push(PresetInfo {
            name,
            samples: points.len(),
            start: path.start().coords().to_vec(),
            end: path.end().coords().to_vec(),
            length: path.length(),
            points,
        });
    }
    Ok((CommandResult::Presets(infos), Some(table), None))
}
