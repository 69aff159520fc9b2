use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hmorph::ar::{enumerate_indecomposables, tau, Caps};
use hmorph::ass::{almost_split_defect, almost_split_sequence_h, tag_middle};
use hmorph::io::{load_workspace, resolve_module, resolve_object, Workspace, BUILTINS};
use hmorph::morph::{
    closed_form_applies, is_projective_h, iso_h, tau_h, tau_h_closed_form, tau_h_via_t2, ClosedForm, HCatalog,
};
use hmorph::naming::{module_label, object_name};
use hmorph::quiver::{
    connectedness_check, dynkin_recognition, gamma_h, orbit_record, stability_check, stable_quiver,
    truncated_polynomial_family,
};
use hmorph::sweep::{check_paper, sequence_checks, Report, SweepOptions};
use hmorph::{Error, TranslationQuiver};

#[derive(Parser)]
#[command(name = "hmorph", version, about = "Auslander-Reiten theory in morphism categories of bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Algebra file, or builtin:NAME (x2, x3, x4, nakayama2, a2, a3).
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// Largest indecomposable dimension accepted while enumerating.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    max_dim: u64,
    /// Cap on object dimension in `T_2` used by check-paper's catalog of H.
    #[arg(long, global = true, default_value_t = 32, value_parser = clap::value_parser!(u64).range(1..))]
    h_max_dim: u64,
    #[arg(long, global = true, default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..))]
    period_bound: u64,
    /// Write a Graphviz rendering of the computed quiver here.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomised splitting fallback.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Auslander-Reiten translate of a module.
    Tau {
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
    },
    /// τ_H of an object, compared with the T2 route and applicable closed forms.
    TauH {
        #[arg(long)]
        object: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
    },
    /// Almost split sequence ending at an object, or every explicit construction.
    Ass {
        #[arg(long)]
        object: Option<String>,
    },
    /// Indecomposables of mod Λ and of H with their translates.
    Knit,
    /// The stable part of the AR quiver of H.
    StableQuiver,
    /// τ_H-orbits and least periods.
    Periodicity {
        #[arg(long)]
        object: Option<String>,
    },
    /// Run every check on one algebra, or on all bundled ones.
    CheckPaper,
}

struct Ctx {
    ws: Workspace,
    caps: Caps,
    period_bound: usize,
}

/// Outcome of a command: printable text, structured value, and whether the
/// requested checks passed.
struct Output {
    text: String,
    value: Value,
    ok: bool,
}

fn workspace(g: &Global) -> Result<Workspace> {
    let src = g.algebra.as_deref().context("--algebra is required for this command")?;
    Ok(load_workspace(src)?)
}

fn ctx(g: &Global) -> Result<Ctx> {
    Ok(Ctx {
        ws: workspace(g)?,
        caps: Caps { max_dim: g.max_dim as usize, ..Caps::default() },
        period_bound: g.period_bound as usize,
    })
}

fn write_dot(g: &Global, q: &TranslationQuiver, name: &str) -> Result<()> {
    if let Some(path) = &g.dot {
        std::fs::write(path, q.to_dot(name)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn cmd_tau(c: &Ctx, module: &str, power: i64) -> Result<Output> {
    let m = resolve_module(&c.ws, module)?;
    let t = tau(&m, power)?;
    let name = module_label(&t);
    Ok(Output {
        text: format!("τ^{power} {} = {name}\n", module_label(&m)),
        value: json!({ "module": module_label(&m), "power": power, "result": name, "dims": t.dims() }),
        ok: true,
    })
}

fn cmd_tau_h(c: &Ctx, object: &str, power: i64) -> Result<Output> {
    let x = resolve_object(&c.ws, object)?;
    let y = tau_h(&x, power)?;
    let mut text = format!("{}\n", object_name(&y));
    let mut ok = true;
    let mut comparisons = Vec::new();
    if power == 1 && !is_projective_h(&x)? {
        let oracle = tau_h_via_t2(&x)?;
        let agree = iso_h(&y, &oracle)?;
        ok &= agree;
        comparisons.push(json!({ "route": "T2", "agrees": agree }));
        text.push_str(&format!("  T2 route: {}\n", if agree { "agrees" } else { "DISAGREES" }));
        for form in ClosedForm::ALL {
            if closed_form_applies(&x, form)? {
                let agree = iso_h(&y, &tau_h_closed_form(&x, form)?)?;
                ok &= agree;
                comparisons.push(json!({ "route": form.name(), "agrees": agree }));
                text.push_str(&format!("  {} form: {}\n", form.name(), if agree { "agrees" } else { "DISAGREES" }));
            }
        }
    }
    Ok(Output {
        text,
        value: json!({
            "object": object_name(&x),
            "power": power,
            "result": object_name(&y),
            "comparisons": comparisons,
        }),
        ok,
    })
}

fn report_output(r: Report) -> Result<Output> {
    Ok(Output { text: r.to_text(), ok: r.passed(), value: serde_json::to_value(&r)? })
}

fn cmd_ass(c: &Ctx, object: Option<&str>) -> Result<Output> {
    let h = HCatalog::build(&c.ws.algebra, c.caps)?;
    let Some(object) = object else {
        let cat = enumerate_indecomposables(&c.ws.algebra, c.caps)?;
        let mut r = Report::new(c.ws.algebra.name());
        sequence_checks(&mut r, &cat, &h);
        return report_output(r);
    };
    let x = resolve_object(&c.ws, object)?;
    let seq = almost_split_sequence_h(&x)?;
    let defect = almost_split_defect(&seq, &h)?;
    let middle: Vec<String> = tag_middle(seq.middle())?
        .into_iter()
        .map(|(_, t)| if t.multiplicity == 1 { t.name } else { format!("{}^{}", t.name, t.multiplicity) })
        .collect();
    let text = format!(
        "0 -> {} -> {} -> {} -> 0\n  middle: {}\n  almost split: {}\n",
        object_name(seq.source()),
        object_name(seq.middle()),
        object_name(seq.target()),
        middle.join(" ⊕ "),
        defect.as_deref().map_or("yes".to_string(), |d| format!("NO ({d})"))
    );
    Ok(Output {
        text,
        value: json!({
            "source": object_name(seq.source()),
            "middle": middle,
            "target": object_name(seq.target()),
            "almost_split": defect.is_none(),
            "defect": defect,
        }),
        ok: defect.is_none(),
    })
}

fn quiver_text(q: &TranslationQuiver) -> String {
    let mut s = String::new();
    for (i, l) in q.labels.iter().enumerate() {
        let mut tags = Vec::new();
        if q.projective[i] {
            tags.push("projective");
        }
        if q.injective[i] {
            tags.push("injective");
        }
        let succ: Vec<&str> = q.successors(i).iter().map(|&j| q.labels[j].as_str()).collect();
        let t = q.tau[i].map_or("-", |t| q.labels[t].as_str());
        s.push_str(&format!("  {l}  τ = {t}  -> [{}]", succ.join(", ")));
        if !tags.is_empty() {
            s.push_str(&format!("  ({})", tags.join(", ")));
        }
        s.push('\n');
    }
    s
}

fn cmd_knit(c: &Ctx, g: &Global) -> Result<Output> {
    let alg = &c.ws.algebra;
    let q = hmorph::ar::ar_quiver(alg, c.caps)?;
    let mut text = format!("mod {}: {} indecomposables\n{}", alg.name(), q.len(), quiver_text(&q));
    let mut value = json!({ "algebra": alg.name(), "modules": serde_json::to_value(&q)? });
    match HCatalog::build(alg, c.caps) {
        Ok(h) => {
            let gh = gamma_h(&h)?;
            text.push_str(&format!("H: {} indecomposables\n{}", gh.len(), quiver_text(&gh)));
            value["h"] = serde_json::to_value(&gh)?;
            write_dot(g, &gh, &format!("Gamma_H {}", alg.name()))?;
        }
        Err(Error::CapExceeded(why)) => {
            text.push_str(&format!("H: not representation-finite within the caps ({why})\n"));
            value["h"] = Value::Null;
            write_dot(g, &q, alg.name())?;
        }
        Err(e) => return Err(e.into()),
    }
    Ok(Output { text, value, ok: true })
}

fn cmd_stable(c: &Ctx, g: &Global) -> Result<Output> {
    let h = HCatalog::build(&c.ws.algebra, c.caps)?;
    let s = stable_quiver(&gamma_h(&h)?);
    write_dot(g, &s, &format!("stable Gamma_H {}", c.ws.algebra.name()))?;
    let stable = stability_check(&s);
    let connected = connectedness_check(&s);
    let dynkin = if stable && connected && !s.is_empty() { Some(dynkin_recognition(&s)?) } else { None };
    let ty = dynkin.as_ref().and_then(|d| d.dynkin.clone());
    let text = format!(
        "{} vertices\n{}stable: {stable}\nconnected: {connected}\nDynkin type: {}\n",
        s.len(),
        quiver_text(&s),
        ty.as_deref().unwrap_or("none")
    );
    Ok(Output {
        text,
        value: json!({
            "quiver": serde_json::to_value(&s)?,
            "stable": stable,
            "connected": connected,
            "dynkin": serde_json::to_value(&dynkin)?,
        }),
        ok: stable && connected && ty.is_some(),
    })
}

fn cmd_periodicity(c: &Ctx, object: Option<&str>) -> Result<Output> {
    let objects = match object {
        Some(o) => vec![resolve_object(&c.ws, o)?],
        None => match truncated_polynomial_family(&c.ws.algebra) {
            Ok(f) => f.into_iter().map(|(_, x)| x).collect(),
            Err(_) => {
                let h = HCatalog::build(&c.ws.algebra, c.caps)?;
                let g = gamma_h(&h)?;
                (0..g.len())
                    .filter(|&i| !g.projective[i] && !g.injective[i])
                    .map(|i| h.objects[i].clone())
                    .collect()
            }
        },
    };
    let mut text = String::new();
    let mut records = Vec::new();
    for x in &objects {
        let r = orbit_record(x, c.period_bound)?;
        let p = r.period.map_or("none".to_string(), |p| p.to_string());
        let flag = match r.period {
            Some(p) if p != 4 && 4 % p == 0 => "  (strict divisor of 4)",
            _ => "",
        };
        text.push_str(&format!("{}  period {p}{flag}\n", r.base));
        for (i, n) in r.iterates.iter().skip(1) {
            text.push_str(&format!("    τ_H^{i}: {n}\n"));
        }
        records.push(r);
    }
    Ok(Output { text, value: serde_json::to_value(&records)?, ok: true })
}

fn cmd_check_paper(g: &Global) -> Result<Output> {
    let caps = Caps { max_dim: g.max_dim as usize, ..Caps::default() };
    let opts = SweepOptions {
        caps,
        h_max_dim: g.h_max_dim as usize,
        period_bound: g.period_bound as usize,
        ..SweepOptions::default()
    };
    let sources: Vec<String> = match &g.algebra {
        Some(a) => vec![a.clone()],
        None => BUILTINS.iter().map(|(n, _)| format!("builtin:{n}")).collect(),
    };
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for src in &sources {
        let ws = load_workspace(src)?;
        let r = check_paper(&ws.algebra, opts)?;
        ok &= r.passed();
        text.push_str(&r.to_text());
        text.push('\n');
        reports.push(r);
    }
    Ok(Output { text, value: json!({ "schema": hmorph::sweep::SCHEMA, "reports": reports }), ok })
}

fn run(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    hmorph::decompose::set_seed(g.seed);
    let out = match &cli.command {
        Command::CheckPaper => cmd_check_paper(g)?,
        cmd => {
            let c = ctx(g)?;
            match cmd {
                Command::Tau { module, power } => cmd_tau(&c, module, *power)?,
                Command::TauH { object, power } => cmd_tau_h(&c, object, *power)?,
                Command::Ass { object } => cmd_ass(&c, object.as_deref())?,
                Command::Knit => cmd_knit(&c, g)?,
                Command::StableQuiver => cmd_stable(&c, g)?,
                Command::Periodicity { object } => cmd_periodicity(&c, object.as_deref())?,
                Command::CheckPaper => unreachable!(),
            }
        }
    };
    match g.format {
        Format::Text => print!("{}", out.text),
        Format::Structured => println!("{}", serde_json::to_string_pretty(&out.value)?),
    }
    Ok(out.ok)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Parse(_)) => 2,
        Some(Error::Hypothesis(_) | Error::CapExceeded(_) | Error::NotAdmissible(_)) => 3,
        Some(_) => 4,
        // Missing flags and unreadable inputs count as usage errors.
        None => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.global.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
