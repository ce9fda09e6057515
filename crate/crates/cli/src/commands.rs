use clap::{Args, Parser, Subcommand};
use cxj_core::rational::{format_rational, int};
use cxj_core::{
    classify, cone_minimum, height_curve, height_point, height_point_with_base, nef_decomposition, pair_theta_power,
    pullback_theta, standard_polarization, top_intersect, witness_sequence, zhang_audit, Genus, NSClass, PointClass,
    Region,
};

use crate::literal::{parse_class, parse_rational_arg, ClassSpec};
use crate::render::{annotated, Cell, Format, Record};
use crate::table::{build_table, render_table, DEFAULT_G_MAX, DEFAULT_G_MIN};
use crate::CliError;

/// Exact calculator for the Néron–Severi lattice of C×J (Picard number 3).
///
/// Classes are written a,b,c for a·α₁ + b·θ₂ + c·Q; rationals as p or p/q.
#[derive(Debug, Parser)]
#[command(name = "cxj", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Genus of the curve (g ≥ 2).
    #[arg(short = 'g', long = "genus", global = true, allow_negative_numbers = true)]
    pub genus: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a class against the nef/ample/big/pseudo-effective cones.
    Classify(ClassifyArgs),
    /// X · Y · θ₂^{g−1}.
    Pair {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Intersection number of g+1 classes.
    Intersect {
        #[arg(required = true, allow_hyphen_values = true)]
        classes: Vec<String>,
    },
    /// Pullback of θ along (x, y) ↦ m(x−α) + n·y.
    Pullback {
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: String,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: String,
    },
    /// Split a nef class into a boundary class plus a multiple of α₁.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// Height of a point class.
    Height {
        /// Point class a,b,c with a > 0.
        #[arg(allow_hyphen_values = true)]
        point: String,
        /// Polarization on C×J; defaults to g·α₁ + θ₂ + Q.
        #[arg(long, short = 'L', allow_hyphen_values = true)]
        polarization: Option<String>,
        /// Polarize the base by λ·θ instead of θ.
        #[arg(long)]
        base_scale: Option<String>,
    },
    /// Height of the generic curve.
    CurveHeight {
        #[arg(allow_hyphen_values = true)]
        polarization: Option<String>,
    },
    /// Minimum of the point height over the pseudo-effective cone.
    Minima {
        #[arg(allow_hyphen_values = true)]
        polarization: Option<String>,
    },
    /// n-th point class of the family attaining the minimum for g·α₁ + θ₂ + Q.
    Witness {
        #[arg(short = 'n', allow_negative_numbers = true)]
        n: i64,
    },
    /// Evaluate both successive-minima inequalities.
    Audit {
        #[arg(allow_hyphen_values = true)]
        polarization: Option<String>,
    },
    /// Minima and curve height of g·α₁ + θ₂ + Q over a range of genera.
    Table {
        #[arg(default_value_t = DEFAULT_G_MIN, allow_negative_numbers = true)]
        g_min: i64,
        #[arg(default_value_t = DEFAULT_G_MAX, allow_negative_numbers = true)]
        g_max: i64,
    },
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Class literal a,b,c (alternative to -a/-b/-c).
    #[arg(allow_hyphen_values = true, conflicts_with_all = ["a", "b", "c"])]
    class: Option<String>,
    #[arg(short = 'a', allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(short = 'b', allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(short = 'c', allow_hyphen_values = true)]
    c: Option<String>,
}

/// Parses `args` (including the program name) and returns the full
/// rendered output.
pub fn run<I, T>(args: I) -> Result<String, RunError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(RunError::Clap)?;
    execute(&cli).map_err(RunError::Cli)
}

#[derive(Debug)]
pub enum RunError {
    Clap(clap::Error),
    Cli(CliError),
}

/// Collapses a clap diagnostic to a single line, dropping the usage hint.
pub fn one_line(e: &clap::Error) -> String {
    let rendered = e.render().to_string();
    let parts: Vec<&str> = rendered
        .lines()
        .map(str::trim)
        .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
        .filter(|l| !l.is_empty())
        .collect();
    if parts.is_empty() {
        "error: invalid arguments".into()
    } else {
        parts.join(" ")
    }
}

fn genus(cli: &Cli) -> Result<i64, CliError> {
    let g = cli.genus.ok_or_else(|| CliError::Usage("missing required --genus/-g".into()))?;
    Genus::new(g)?;
    Ok(g)
}

fn polarization_or_default(g: i64, literal: Option<&str>) -> Result<NSClass, CliError> {
    match literal {
        Some(s) => Ok(parse_class(g, s)?),
        None => Ok(standard_polarization(Genus::new(g)?)),
    }
}

pub fn execute(cli: &Cli) -> Result<String, CliError> {
    if let Command::Table { g_min, g_max } = cli.command {
        let rows = build_table(g_min, g_max)?;
        return Ok(render_table(&rows, cli.format));
    }
    let record = match &cli.command {
        Command::Classify(args) => cmd_classify(genus(cli)?, args)?,
        Command::Pair { x, y } => {
            let g = genus(cli)?;
            let v = pair_theta_power(&parse_class(g, x)?, &parse_class(g, y)?)?;
            Record::new(annotated(&v)).rational("value", &v)
        }
        Command::Intersect { classes } => {
            let g = genus(cli)?;
            let parsed = classes.iter().map(|s| parse_class(g, s)).collect::<Result<Vec<_>, _>>()?;
            let v = top_intersect(&parsed)?;
            Record::new(annotated(&v)).rational("value", &v)
        }
        Command::Pullback { m, n } => {
            let g = Genus::new(genus(cli)?)?;
            let x = pullback_theta(g, &parse_rational_arg(m)?, &parse_rational_arg(n)?);
            class_record(x.to_string(), &x)
        }
        Command::Decompose { class } => {
            let x = parse_class(genus(cli)?, class)?;
            let d = nef_decomposition(&x)?;
            let prefix = if d.degenerate { "degenerate: " } else { "" };
            let text =
                format!("{prefix}boundary part {}, alpha excess {}", d.boundary_part, format_rational(&d.alpha_excess));
            let bp = &d.boundary_part;
            Record::new(text)
                .rational("boundary_a", &bp.a)
                .rational("boundary_b", &bp.b)
                .rational("boundary_c", &bp.c)
                .rational("alpha_excess", &d.alpha_excess)
                .field("degenerate", Cell::Bool(d.degenerate))
        }
        Command::Height { point, polarization, base_scale } => {
            let g = genus(cli)?;
            let l = polarization_or_default(g, polarization.as_deref())?;
            let p = PointClass::new(parse_class(g, point)?)?;
            let report = match base_scale {
                Some(s) => height_point_with_base(&l, &p, &parse_rational_arg(s)?)?,
                None => height_point(&l, &p)?,
            };
            Record::new(format!("height {}, degree {}", annotated(&report.height), format_rational(&report.degree)))
                .rational("height", &report.height)
                .rational("degree", &report.degree)
        }
        Command::CurveHeight { polarization } => {
            let l = polarization_or_default(genus(cli)?, polarization.as_deref())?;
            let h = height_curve(&l)?;
            Record::new(annotated(&h)).rational("h_curve", &h)
        }
        Command::Minima { polarization } => {
            let l = polarization_or_default(genus(cli)?, polarization.as_deref())?;
            let r = cone_minimum(&l)?;
            let mut text = format!(
                "infimum {} at s* = {}, t* = {}",
                annotated(&r.infimum),
                format_rational(&r.s_star),
                format_rational(&r.t_star)
            );
            let (p, q) = match &r.witness {
                Some(w) => {
                    text.push_str(&format!("\nattained by multiples of f_{{{},{}}}^*theta = {}", w.p, w.q, w.class()));
                    (w.p.to_string(), w.q.to_string())
                }
                None => {
                    text.push_str("\nno attaining witness found (lower bound only)");
                    (String::new(), String::new())
                }
            };
            Record::new(text)
                .rational("infimum", &r.infimum)
                .rational("s_star", &r.s_star)
                .rational("t_star", &r.t_star)
                .field("attained_by_witness", Cell::Bool(r.attained_by_witness))
                .field("witness_p", Cell::Str(p))
                .field("witness_q", Cell::Str(q))
        }
        Command::Witness { n } => {
            let g = Genus::new(genus(cli)?)?;
            let w = witness_sequence(g, *n)?;
            let h = height_point(&standard_polarization(g), &w)?;
            let text =
                format!("{}, degree {}, height {}", w.class(), format_rational(&h.degree), format_rational(&h.height));
            class_record(text, w.class()).rational("degree", &h.degree).rational("height", &h.height)
        }
        Command::Audit { polarization } => {
            let l = polarization_or_default(genus(cli)?, polarization.as_deref())?;
            audit_record(&l)?
        }
        Command::Table { .. } => unreachable!("handled above"),
    };
    Ok(record.render(cli.format))
}

fn class_record(text: String, x: &NSClass) -> Record {
    Record::new(text).rational("a", &x.a).rational("b", &x.b).rational("c", &x.c)
}

fn cmd_classify(g: i64, args: &ClassifyArgs) -> Result<Record, CliError> {
    let x = match (&args.class, &args.a, &args.b, &args.c) {
        (Some(lit), None, None, None) => parse_class(g, lit)?,
        (None, Some(a), Some(b), Some(c)) => ClassSpec { g, a: a.clone(), b: b.clone(), c: c.clone() }.parse()?,
        _ => return Err(CliError::Usage("classify: give a class literal a,b,c or all of -a, -b, -c".into())),
    };
    let v = classify(&x);
    let defect = format_rational(&v.defect);
    let text = match v.region {
        Region::Interior => format!("interior (ample, big), defect {defect}"),
        Region::Boundary if x.is_zero() => format!("boundary (apex), nef, not ample, defect {defect}"),
        Region::Boundary => format!("boundary (nef, not ample), defect {defect}"),
        Region::Outside => format!("outside (defect {defect})"),
    };
    Ok(Record::new(text)
        .field("region", Cell::Str(v.region.as_str().into()))
        .field("is_ample", Cell::Bool(v.is_ample))
        .field("is_nef", Cell::Bool(v.is_nef))
        .field("is_big", Cell::Bool(v.is_big))
        .field("is_psef", Cell::Bool(v.is_psef))
        .rational("defect", &v.defect))
}

fn audit_record(l: &NSClass) -> Result<Record, CliError> {
    let a = zhang_audit(l)?;
    let mean = (&a.e1 + &a.e2) / int(2);
    let mut lines = vec![
        format!("polarization L = {l} in genus {}", l.genus()),
        format!("e1 = {}", annotated(&a.e1)),
        format!("e2 = {}", annotated(&a.e2)),
        format!("h  = {}", annotated(&a.h_curve)),
        format!("(e1+e2)/2 = {}", annotated(&mean)),
    ];
    if a.first_inequality_holds {
        lines.push("first inequality e1 >= h holds".into());
    } else {
        lines.push("first inequality e1 >= h FAILS".into());
    }
    if a.second_inequality_holds {
        lines.push(format!(
            "second inequality h >= (e1+e2)/2 holds (slack {})",
            format_rational(&-a.violation_margin.clone())
        ));
    } else {
        lines.push(format!("second inequality VIOLATED by {} (h < (e1+e2)/2)", format_rational(&a.violation_margin)));
    }
    if a.lower_bound_only {
        lines.push("note: no attaining witness; e1 and e2 are lower bounds".into());
    }
    Ok(Record::new(lines.join("\n"))
        .rational("e1", &a.e1)
        .rational("e2", &a.e2)
        .rational("h", &a.h_curve)
        .rational("mean", &mean)
        .field("first_inequality_holds", Cell::Bool(a.first_inequality_holds))
        .field("second_inequality_holds", Cell::Bool(a.second_inequality_holds))
        .rational("violation_margin", &a.violation_margin)
        .field("lower_bound_only", Cell::Bool(a.lower_bound_only)))
}
