use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use cremona::fixedcurve::{
    check_involutive, classify_involution, fixed_locus, invariant_of, singular_fibre_count, ClassLabel, ClassifyInput,
    FixedCurveInvariant,
};
use cremona::involutions::{
    bertini_record, dj_from_conic, dj_involution, geiser_record, interpolate_geiser, Evaluator, FactorBookkeeping,
    InvolutionError, InvolutionRecord, PointConfig,
};
use cremona::picard::{
    anti_reflection_in_K, classify_pair, elementary_transformation, exceptional_classes, fixed_rank, is_minimal,
    reflection_through, ConicBundleModel, DivClass, LatticeInvolution, LatticeModel, MinimalityFailure, PairClass,
    PicLattice, TransformCenter,
};
use cremona::projmaps::{base_points, ProjPoint, RationalMap};
use cremona::rng::SeededRng;

use crate::args::{
    ClassifySource, Cli, Command, Construction, LatticeArg, LatticeCommand, LatticeInvolutionArg, MapSource, PointRun,
};
use crate::error::CliError;
use crate::parse::{parse_class, parse_matrix_file, parse_point, parse_points_file, parse_poly};
use crate::report::{self, Envelope};

/// Maps are checked symbolically up to this degree in `verify`.
const SYMBOLIC_VERIFY_DEGREE: u32 = 6;

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dj { .. } => "dj",
        Command::DjConic { .. } => "dj-conic",
        Command::Geiser { .. } => "geiser",
        Command::Bertini { .. } => "bertini",
        Command::Verify { .. } => "verify",
        Command::FixedCurve { .. } => "fixed-curve",
        Command::Invariant { .. } => "invariant",
        Command::Classify { .. } => "classify",
        Command::Lattice(l) => match l {
            LatticeCommand::Make { .. } => "lattice make",
            LatticeCommand::Reflect { .. } => "lattice reflect",
            LatticeCommand::Exceptionals { .. } => "lattice exceptionals",
            LatticeCommand::Minimal { .. } => "lattice minimal",
            LatticeCommand::Classify { .. } => "lattice classify",
        },
        Command::Elmt { .. } => "elmt",
    }
}

pub fn execute(cli: &Cli) -> Result<Value, CliError> {
    let seed = cli.seed;
    let wrap = |body: Value| {
        let env = Envelope {
            command: command_name(&cli.command).to_string(),
            seed,
            body,
        };
        serde_json::to_value(env).expect("serializable")
    };
    let body = match &cli.command {
        Command::Dj { curve, center, trusted } => {
            let rec = dj_involution(&parse_poly(curve)?, &parse_point(center)?, *trusted)?;
            to_value(dj_report(&rec, seed)?)
        }
        Command::DjConic { q, p } => {
            let rec = dj_from_conic(&parse_poly(q)?, &parse_point(p)?)?;
            to_value(dj_report(&rec, seed)?)
        }
        Command::Geiser { run, interpolate } => {
            let config = PointConfig::geiser(points_file(&run.points)?)?;
            let rec = geiser_record(config, seed)?;
            let mut out = point_report(&rec, run, seed)?;
            if let (Some(count), Evaluator::Geiser(g)) = (interpolate, &rec.evaluator) {
                out.components = Some(report::components(&interpolate_geiser(g, *count, seed)?));
            }
            to_value(out)
        }
        Command::Bertini { run } => {
            let config = PointConfig::bertini(points_file(&run.points)?)?;
            let rec = bertini_record(config, seed)?;
            to_value(point_report(&rec, run, seed)?)
        }
        Command::Verify { map } => {
            let m = read_map(map.map_file.as_deref(), map.components.as_deref())?;
            check_involutive(&m, seed)?;
            to_value(report::Verify {
                involutive: true,
                degree: m.degree(),
                components: report::components(&m),
                method: if m.degree() <= SYMBOLIC_VERIFY_DEGREE {
                    "symbolic"
                } else {
                    "pointwise"
                },
            })
        }
        Command::FixedCurve { map } => {
            let m = map_source(map)?;
            let f = fixed_locus(&m)?;
            to_value(report::FixedCurve {
                degree: m.degree(),
                components: report::components(&m),
                fixed_curve: (f.degree() > 0).then(|| report::poly(&f)),
                fixed_curve_degree: f.degree(),
            })
        }
        Command::Invariant { source } => {
            let rec = construct(source, seed)?;
            let inv = invariant_of(&rec)?;
            to_value(report::Invariant {
                kind: rec.kind.to_string(),
                degree: rec.degree().unwrap_or(0),
                invariant: inv.to_string(),
                genus: inv.genus(),
                fixed_curve_degree: rec.fixed_curve.as_ref().map(|f| f.degree()),
            })
        }
        Command::Classify { source } => to_value(classify(source, seed)?),
        Command::Lattice(cmd) => lattice_command(cmd)?,
        Command::Elmt {
            n,
            fibres,
            contacts,
            at,
        } => {
            let model = ConicBundleModel {
                n: *n,
                singular_fibres: *fibres,
                contact_orders: contacts.clone(),
            };
            to_value(elementary(model, at)?)
        }
    };
    Ok(wrap(body))
}

fn to_value<T: serde::Serialize>(t: T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn points_file(path: &Path) -> Result<Vec<ProjPoint>, CliError> {
    parse_points_file(&read(path)?).map_err(|source| CliError::InFile {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Deserialize)]
struct MapFile {
    components: Vec<String>,
}

fn map_from_strings(c: &[String]) -> Result<RationalMap, CliError> {
    let [a, b, c] = c else {
        return Err(CliError::Usage(format!("a map needs 3 components, got {}", c.len())));
    };
    Ok(RationalMap::new([parse_poly(a)?, parse_poly(b)?, parse_poly(c)?])?)
}

fn read_map(file: Option<&Path>, components: Option<&[String]>) -> Result<RationalMap, CliError> {
    match (file, components) {
        (Some(path), _) => {
            let parsed: MapFile = serde_json::from_str(&read(path)?).map_err(|source| CliError::Json {
                path: path.to_path_buf(),
                source,
            })?;
            map_from_strings(&parsed.components)
        }
        (None, Some(c)) => map_from_strings(c),
        (None, None) => Err(CliError::Usage("no map given".into())),
    }
}

fn map_source(m: &MapSource) -> Result<RationalMap, CliError> {
    read_map(m.map_file.as_deref(), m.components.as_deref())
}

fn construct(c: &Construction, seed: u64) -> Result<InvolutionRecord, CliError> {
    if let Some(curve) = &c.curve {
        let center = c
            .center
            .as_deref()
            .ok_or_else(|| CliError::Usage("--curve needs --center".into()))?;
        let (curve, center) = (parse_poly(curve)?, parse_point(center)?);
        return Ok(if curve.degree() == 2 {
            dj_from_conic(&curve, &center)?
        } else {
            dj_involution(&curve, &center, c.trusted)?
        });
    }
    if let Some(path) = &c.geiser {
        return Ok(geiser_record(PointConfig::geiser(points_file(path)?)?, seed)?);
    }
    if let Some(path) = &c.bertini {
        return Ok(bertini_record(PointConfig::bertini(points_file(path)?)?, seed)?);
    }
    Err(CliError::Usage(
        "one of --curve, --geiser or --bertini is required".into(),
    ))
}

fn dj_report(rec: &InvolutionRecord, seed: u64) -> Result<report::Involution, CliError> {
    let mut out = report::Involution::from_record(rec);
    let dj = rec.dj.as_ref().expect("DJ record");
    out.dj = Some(report::DjInfo {
        center: report::point(&dj.center),
        discriminant: dj.report.discriminant.to_string(),
        singular_fibres: singular_fibre_count(dj)?,
        trusted: dj.report.trusted,
        singularities_checked: dj.report.singularities_checked,
    });
    let map = rec.map.as_ref().expect("DJ records carry a map");
    let bp = base_points(map, seed)?;
    out.base_points = Some(report::BasePointsInfo {
        rational: bp.points.iter().map(report::point).collect(),
        irrational_degree: bp.irrational_degree,
    });
    Ok(out)
}

fn traced(rec: &InvolutionRecord, x: &ProjPoint) -> Result<(ProjPoint, FactorBookkeeping), InvolutionError> {
    match &rec.evaluator {
        Evaluator::Geiser(g) => g.eval_traced(x),
        Evaluator::Bertini(b) => b.eval_traced(x),
        Evaluator::Map => unreachable!("point-configuration records only"),
    }
}

fn evaluate(rec: &InvolutionRecord, x: &ProjPoint) -> Result<report::Evaluation, InvolutionError> {
    let (image, book) = traced(rec, x)?;
    let (back, _) = traced(rec, &image)?;
    Ok(report::Evaluation {
        input: report::point(x),
        image: report::point(&image),
        round_trip: &back == x,
        bookkeeping: (&book).into(),
    })
}

fn point_report(rec: &InvolutionRecord, run: &PointRun, seed: u64) -> Result<report::Involution, CliError> {
    let config = match &rec.evaluator {
        Evaluator::Geiser(g) => g.config(),
        Evaluator::Bertini(b) => b.config(),
        Evaluator::Map => unreachable!("point-configuration records only"),
    };
    let mut evals = Vec::new();
    for text in &run.at {
        evals.push(evaluate(rec, &parse_point(text)?)?);
    }
    let mut rng = SeededRng::new(seed);
    let mut tries = 0;
    let mut sampled = 0;
    while sampled < run.samples {
        tries += 1;
        if tries > 20 * run.samples {
            return Err(InvolutionError::ResidualExtraction { attempts: tries as u32 }.into());
        }
        let Ok(x) = ProjPoint::new(std::array::from_fn(|_| rng.rat_in(-9, 9))) else {
            continue;
        };
        if config.points().contains(&x) {
            continue;
        }
        match evaluate(rec, &x) {
            Ok(e) => {
                evals.push(e);
                sampled += 1;
            }
            Err(InvolutionError::BasePointInput | InvolutionError::SystemDimension { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    if let Some(e) = evals.iter().find(|e| !e.round_trip) {
        return Err(CliError::RoundTrip(e.input.clone()));
    }
    let mut out = report::Involution::from_record(rec);
    out.config = Some(report::ConfigInfo::new(config));
    out.evaluations = Some(evals);
    Ok(out)
}

fn classify(source: &ClassifySource, seed: u64) -> Result<report::Classify, CliError> {
    let (c, invariant) = if source.map_file.is_some() || source.components.is_some() {
        let m = read_map(source.map_file.as_deref(), source.components.as_deref())?;
        let c = classify_involution(ClassifyInput::Map(&m), seed)?;
        let inv = match c.label {
            ClassLabel::Known(k) => Some(FixedCurveInvariant::for_kind(k)),
            ClassLabel::Unrecognized => None,
        };
        (c, inv)
    } else {
        let rec = construct(&source.construction, seed)?;
        (
            classify_involution(ClassifyInput::Record(&rec), seed)?,
            Some(rec.invariant),
        )
    };
    Ok(report::Classify {
        label: c.label.to_string(),
        recognized: matches!(c.label, ClassLabel::Known(_)),
        degree: c.degree,
        fixed_curve_degree: c.fixed_curve_degree,
        center: c.center.as_ref().map(report::point),
        invariant: invariant.map(|i| i.to_string()),
        from_metadata: c.from_metadata,
        rational_components_certified: c.rational_components_certified,
    })
}

fn lattice(arg: &LatticeArg) -> Result<PicLattice, CliError> {
    match (arg.quadric, arg.n) {
        (true, _) => Ok(PicLattice::quadric()),
        (false, Some(n)) => Ok(PicLattice::blow_up(n)),
        (false, None) => Err(CliError::Usage("one of --n or --quadric is required".into())),
    }
}

fn model_name(lat: &PicLattice) -> String {
    match lat.model() {
        LatticeModel::BlowUp(n) => format!("blow-up({n})"),
        LatticeModel::Quadric => "quadric".into(),
    }
}

fn lattice_involution(lat: &PicLattice, arg: &LatticeInvolutionArg) -> Result<LatticeInvolution, CliError> {
    if let Some(path) = &arg.matrix_file {
        let m = parse_matrix_file(&read(path)?).map_err(|source| CliError::InFile {
            path: path.to_path_buf(),
            source,
        })?;
        return Ok(LatticeInvolution::new(lat, m)?);
    }
    if arg.anti_canonical {
        return Ok(anti_reflection_in_K(lat)?);
    }
    Ok(LatticeInvolution::identity(lat))
}

fn witness(lat: &PicLattice, w: Option<&(DivClass, MinimalityFailure)>) -> Option<report::Witness> {
    w.map(|(c, f)| report::Witness {
        class: report::ClassOut::new(lat, c),
        failure: match f {
            MinimalityFailure::Invariant => "invariant",
            MinimalityFailure::Disjoint { .. } => "disjoint",
        },
        intersection: match f {
            MinimalityFailure::Invariant => None,
            MinimalityFailure::Disjoint { intersection } => Some(*intersection),
        },
    })
}

fn lattice_command(cmd: &LatticeCommand) -> Result<Value, CliError> {
    Ok(match cmd {
        LatticeCommand::Make { lattice: arg } => {
            let lat = lattice(arg)?;
            let (pos, neg) = lat.signature();
            to_value(report::Lattice {
                model: model_name(&lat),
                rank: lat.rank(),
                gram: lat.gram().to_vec(),
                canonical: lat.canonical().0.clone(),
                k_squared: lat.k_squared(),
                signature: [pos, neg],
            })
        }
        LatticeCommand::Reflect {
            lattice: arg,
            alpha,
            anti_canonical,
        } => {
            let lat = lattice(arg)?;
            let m = match (alpha, anti_canonical) {
                (Some(a), _) => reflection_through(&lat, &parse_class(a)?)?,
                (None, true) => anti_reflection_in_K(&lat)?.matrix().clone(),
                (None, false) => return Err(CliError::Usage("one of --alpha or --anti-canonical is required".into())),
            };
            let valid = LatticeInvolution::new(&lat, m.clone()).ok();
            to_value(report::Reflection {
                model: model_name(&lat),
                matrix: m.0,
                valid_involution: valid.is_some(),
                fixed_rank: valid.as_ref().map(fixed_rank),
            })
        }
        LatticeCommand::Exceptionals { lattice: arg } => {
            let lat = lattice(arg)?;
            let classes = exceptional_classes(&lat)?;
            to_value(report::Exceptionals {
                model: model_name(&lat),
                count: classes.len(),
                classes: classes.iter().map(|c| report::ClassOut::new(&lat, c)).collect(),
            })
        }
        LatticeCommand::Minimal {
            lattice: arg,
            involution,
        } => {
            let lat = lattice(arg)?;
            let inv = lattice_involution(&lat, involution)?;
            let m = is_minimal(&lat, &inv)?;
            to_value(report::Minimal {
                model: model_name(&lat),
                minimal: m.minimal,
                witness: witness(&lat, m.witness.as_ref()),
            })
        }
        LatticeCommand::Classify {
            lattice: arg,
            involution,
        } => {
            let lat = lattice(arg)?;
            let inv = lattice_involution(&lat, involution)?;
            let class = classify_pair(&lat, &inv)?;
            let w = match &class {
                PairClass::NonMinimal { witness, failure } => Some((witness.clone(), *failure)),
                _ => None,
            };
            to_value(report::PairLabel {
                model: model_name(&lat),
                label: class.label().to_string(),
                fixed_rank: fixed_rank(&inv),
                witness: witness(&lat, w.as_ref()),
            })
        }
    })
}

fn parse_center(text: &str) -> Result<TransformCenter, CliError> {
    match text {
        "off" => Ok(TransformCenter::OffSection),
        "on" => Ok(TransformCenter::OnSection),
        _ => text
            .strip_prefix("contact:")
            .and_then(|i| i.parse().ok())
            .map(TransformCenter::Contact)
            .ok_or_else(|| CliError::Usage(format!("unknown center {text:?}; use off, on or contact:I"))),
    }
}

fn step(center: &str, m: &ConicBundleModel) -> report::BundleStep {
    report::BundleStep {
        center: center.to_string(),
        n: m.n,
        section_self_intersection: m.section_self_intersection(),
        singular_fibres: m.singular_fibres,
        contact_orders: m.contact_orders.clone(),
    }
}

fn elementary(model: ConicBundleModel, at: &[String]) -> Result<report::Elementary, CliError> {
    let start = step("start", &model);
    let mut cur = model;
    let mut steps = Vec::new();
    for text in at {
        cur = elementary_transformation(&cur, parse_center(text)?)?;
        steps.push(step(text, &cur));
    }
    Ok(report::Elementary { start, steps })
}
