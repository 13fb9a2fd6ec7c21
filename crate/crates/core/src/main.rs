//! Command-line surface for the linearly-joined pipeline.
//!
//! Exit codes: 0 success, 1 negative mathematical verdict, 2 input error,
//! 3 budget or cap exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use ljoin::arrangement::ArrError;
use ljoin::decomp::{decompose, intersection_generators, LJDecomposition};
use ljoin::invariants::{cm_check, depth_reg, extend_arrangement, invariant_report};
use ljoin::monomial::{
    facet_order_to_arrangement, ferrer, parse_squarefree, recognize_two_linear, sample_complex,
    simplicial_ideal, FerrerShape, Recognition, SimplicialIdealSpec,
};
use ljoin::oracle::{
    hochster_betti_field, oracle_invariants, vanishing_and_containment, HomologyField,
    OracleError, VanishMode,
};
use ljoin::tableau::{build_tableau, Tableau};
use ljoin::Arrangement;
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ljoin",
    version,
    about = "Linearly joined arrangements: orders, tableaux, invariants, oracles"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Input file; stdin when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cross-check results with the Betti-number oracle where feasible.
    #[arg(long, global = true, value_enum, default_value_t = Toggle::On)]
    oracle: Toggle,
    /// Node budget for the order search.
    #[arg(long, global = true, default_value_t = 100_000)]
    budget_nodes: u64,
    /// Variable cap for the Betti oracle.
    #[arg(long, global = true, default_value_t = 14)]
    max_vars: usize,
    /// Seed for finite-field sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Prime for finite-field sampling.
    #[arg(long, global = true, default_value_t = 101)]
    gf: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify that the arrangement's component order is linearly joined.
    Check,
    /// Search for a linearly joined order of the components.
    Order,
    /// Compute the D / Delta / P decomposition and the quadric generators.
    Decompose,
    /// Build and verify the triangle tableau; print its diagonal sums.
    Tableau,
    /// Report depth, regularity, projdim, ara, cd, connectedness.
    Invariants,
    /// Adjoin fresh variable blocks (one size per component).
    Extend {
        /// Comma-separated block sizes, e.g. `1,1,0,2`.
        #[arg(long)]
        blocks: String,
    },
    /// Square-free pipeline: parse, recognize, order facets, tableau,
    /// invariants.
    Sr,
    /// Ferrer ideal of a partition.
    Ferrer {
        /// The partition, e.g. `3 2 2 1`; read from input when omitted.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Simplicial-ideal decomposition from a JSON spec.
    Simplicial,
    /// Brute-force verification tools.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
    /// Run the built-in example suite.
    Selftest,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Betti table of a square-free monomial ideal by the Hochster formula.
    Betti,
    /// Check the radical identity for an arrangement's tableau sums.
    VerifyRadical,
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn input(msg: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            msg: msg.into(),
        }
    }

    fn verdict(msg: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            msg: msg.into(),
        }
    }

    fn budget(msg: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            msg: msg.into(),
        }
    }
}

impl From<ArrError> for Failure {
    fn from(e: ArrError) -> Failure {
        match e {
            ArrError::SearchBudgetExceeded(_) => Failure::budget(e.to_string()),
            _ => Failure::input(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Failure {
        match e {
            OracleError::CapExceeded { .. } => Failure::budget(e.to_string()),
            OracleError::CounterexamplePoint(_) | OracleError::NotVanishing { .. } => {
                Failure::verdict(e.to_string())
            }
            _ => Failure::input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(cli: &Cli) -> Result<String, Failure> {
    match &cli.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_arrangement(cli: &Cli) -> Result<Arrangement, Failure> {
    let arr = Arrangement::parse(&read_input(cli)?)?;
    arr.validate()?;
    Ok(arr)
}

fn emit(cli: &Cli, text: String, payload: serde_json::Value) {
    match cli.format {
        Format::Text => println!("{}", text.trim_end()),
        Format::Json => {
            let mut obj = json!({ "schema": 1 });
            obj.as_object_mut()
                .unwrap()
                .extend(payload.as_object().cloned().unwrap_or_default());
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Check => cmd_check(cli),
        Cmd::Order => cmd_order(cli),
        Cmd::Decompose => cmd_decompose(cli),
        Cmd::Tableau => cmd_tableau(cli),
        Cmd::Invariants => cmd_invariants(cli),
        Cmd::Extend { blocks } => cmd_extend(cli, blocks),
        Cmd::Sr => cmd_sr(cli),
        Cmd::Ferrer { lambda } => cmd_ferrer(cli, lambda.as_deref()),
        Cmd::Simplicial => cmd_simplicial(cli),
        Cmd::Oracle { which } => match which {
            OracleCmd::Betti => cmd_betti(cli),
            OracleCmd::VerifyRadical => cmd_verify_radical(cli),
        },
        Cmd::Selftest => cmd_selftest(cli),
    }
}

fn cmd_check(cli: &Cli) -> Result<(), Failure> {
    let arr = parse_arrangement(cli)?;
    let rep = arr.check_order();
    let witnesses: Vec<_> = rep
        .witnesses
        .iter()
        .map(|w| w.map(|j| arr.components[j].name.clone()))
        .collect();
    let mut text = format!(
        "order {}: {}\n",
        if rep.ok { "valid" } else { "invalid" },
        arr.components
            .iter()
            .map(|c| c.name.as_str())
            .collect::<Vec<_>>()
            .join(" -> ")
    );
    for (k, w) in witnesses.iter().enumerate() {
        text += &format!(
            "  step {}: {}\n",
            k + 2,
            match w {
                Some(name) => format!("witness {name}"),
                None => "no witness".to_string(),
            }
        );
    }
    emit(
        cli,
        text,
        json!({ "ok": rep.ok, "witnesses": witnesses,
                "first_violation": rep.first_violation }),
    );
    if rep.ok {
        Ok(())
    } else {
        Err(Failure::verdict("the given order is not linearly joined"))
    }
}

fn cmd_order(cli: &Cli) -> Result<(), Failure> {
    let arr = parse_arrangement(cli)?;
    let order = arr.find_order(cli.budget_nodes)?;
    match order {
        Some(order) => {
            let names: Vec<_> = order
                .iter()
                .map(|&i| arr.components[i].name.clone())
                .collect();
            emit(
                cli,
                format!("linearly joined order: {}", names.join(" -> ")),
                json!({ "found": true, "order": names }),
            );
            Ok(())
        }
        None => {
            emit(
                cli,
                "no linearly joined order exists".into(),
                json!({ "found": false }),
            );
            Err(Failure::verdict("no linearly joined order exists"))
        }
    }
}

fn decomposition_of(arr: &Arrangement) -> Result<LJDecomposition, Failure> {
    let rep = arr.check_order();
    if !rep.ok {
        return Err(Failure::verdict(
            "the component order is not linearly joined; try `order`",
        ));
    }
    decompose(arr).map_err(|e| Failure::verdict(e.to_string()))
}

fn space_strs(arr: &Arrangement, s: &ljoin::LinearSpace) -> Vec<String> {
    s.basis
        .iter()
        .map(|f| f.display(&arr.vars).to_string())
        .collect()
}

fn cmd_decompose(cli: &Cli) -> Result<(), Failure> {
    let arr = parse_arrangement(cli)?;
    let dec = decomposition_of(&arr)?;
    let l = dec.len();
    let mut text = String::new();
    for k in 0..l {
        text += &format!(
            "k={}: D = {{{}}}, Delta = {{{}}}, P = {{{}}}\n",
            k + 1,
            space_strs(&arr, &dec.d[k]).join(", "),
            space_strs(&arr, &dec.delta[k]).join(", "),
            space_strs(&arr, &dec.p[k]).join(", "),
        );
    }
    text += &format!("D_tail = {{{}}}\n", space_strs(&arr, &dec.d_tail).join(", "));
    let gens: Vec<String> = intersection_generators(&arr, &dec, l)
        .iter()
        .map(|g| g.to_string())
        .collect();
    text += &format!("intersection generators: {}\n", gens.join(", "));
    emit(
        cli,
        text,
        json!({
            "levels": (0..l).map(|k| json!({
                "d": space_strs(&arr, &dec.d[k]),
                "delta": space_strs(&arr, &dec.delta[k]),
                "p": space_strs(&arr, &dec.p[k]),
            })).collect::<Vec<_>>(),
            "d_tail": space_strs(&arr, &dec.d_tail),
            "generators": gens,
        }),
    );
    Ok(())
}

fn tableau_payload(arr: &Arrangement, dec: &LJDecomposition, tab: &Tableau) -> serde_json::Value {
    let sums: Vec<String> = tab.diagonal_sums().iter().map(|s| s.to_string()).collect();
    json!({
        "lines": tab.line_count(),
        "d_tail_dim": dec.d_tail.dim(),
        "ara": tab.line_count() + dec.d_tail.dim(),
        "elements": tab.elements.iter()
            .map(|e| e.display(&arr.vars).to_string()).collect::<Vec<_>>(),
        "diagonal_sums": sums,
    })
}

fn cmd_tableau(cli: &Cli) -> Result<(), Failure> {
    let arr = parse_arrangement(cli)?;
    let dec = decomposition_of(&arr)?;
    let tab = build_tableau(&dec).map_err(|e| Failure::verdict(e.to_string()))?;
    let cert = tab
        .sv_certificate()
        .map_err(|e| Failure::verdict(e.to_string()))?;
    let max_m = cert.witnesses.iter().map(|w| w.m).max().unwrap_or(1);
    let mut text = tab.render_text();
    text += "\ndiagonal sums:\n";
    for (i, s) in tab.diagonal_sums().iter().enumerate() {
        text += &format!("  q{} = {s}\n", i + 1);
    }
    text += &format!(
        "lines: {}, ara: {}, max SV exponent: {max_m}\n",
        tab.line_count(),
        tab.line_count() + dec.d_tail.dim()
    );
    if cli.oracle == Toggle::On {
        let mut sums = tab.diagonal_sums();
        sums.extend(dec.d_tail.basis.iter().map(|f| f.to_poly(&arr.vars)));
        vanishing_and_containment(&sums, &arr, VanishMode::Exact)?;
        let mode = if arr.n_vars() <= 16 {
            VanishMode::Gf2Exhaustive
        } else {
            VanishMode::GfSample {
                p: cli.gf,
                count: 10_000,
                seed: cli.seed,
            }
        };
        let rep = vanishing_and_containment(&sums, &arr, mode)?;
        text += &format!(
            "radical evidence: exact containment + {} ({} common zeros checked)\n",
            rep.mode, rep.points_checked
        );
    }
    let mut payload = tableau_payload(&arr, &dec, &tab);
    payload.as_object_mut().unwrap().insert(
        "max_sv_exponent".into(),
        json!(max_m),
    );
    emit(cli, text, payload);
    Ok(())
}

fn cmd_invariants(cli: &Cli) -> Result<(), Failure> {
    let arr = parse_arrangement(cli)?;
    let dec = decomposition_of(&arr)?;
    let tab = if arr.is_linear_only() {
        Some(build_tableau(&dec).map_err(|e| Failure::verdict(e.to_string()))?)
    } else {
        None
    };
    let rep =
        invariant_report(&arr, &dec, tab.as_ref()).map_err(|e| Failure::input(e.to_string()))?;
    let cm = cm_check(&arr, &dec).map_err(|e| Failure::input(e.to_string()))?;
    let text = format!(
        "depth: {}\nreg: {}\nprojdim: {}\nara: {}\ncd: {}\nconnectedness (affine/projective): {}/{}\nCohen-Macaulay: {}\n{}",
        rep.depth,
        rep.reg,
        rep.projdim,
        rep.ara,
        rep.cd,
        rep.conn_dim_affine,
        rep.conn_dim_proj,
        cm.is_cm,
        rep.assumptions
            .iter()
            .map(|a| format!("note: {a}\n"))
            .collect::<String>(),
    );
    emit(
        cli,
        text,
        json!({
            "invariants": serde_json::to_value(&rep).unwrap(),
            "cm": serde_json::to_value(&cm).unwrap(),
        }),
    );
    Ok(())
}

fn cmd_extend(cli: &Cli, blocks: &str) -> Result<(), Failure> {
    let arr = parse_arrangement(cli)?;
    let sizes: Vec<usize> = blocks
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Failure::input(format!("bad block size `{t}`"))))
        .collect::<Result<_, _>>()?;
    if sizes.len() != arr.len() {
        return Err(Failure::input(format!(
            "{} block sizes for {} components",
            sizes.len(),
            arr.len()
        )));
    }
    let dec = decomposition_of(&arr)?;
    let before = depth_reg(&arr, &dec).map_err(|e| Failure::input(e.to_string()))?.0;
    let ext = extend_arrangement(&arr, &sizes);
    let edec = decomposition_of(&ext)?;
    let after = depth_reg(&ext, &edec).map_err(|e| Failure::input(e.to_string()))?.0;
    if before != after {
        return Err(Failure::verdict(format!(
            "depth changed under extension: {before} -> {after}"
        )));
    }
    let text = format!(
        "extended to {} variables; depth preserved at {after}\nnew variables: {}",
        ext.n_vars(),
        ext.vars[arr.n_vars()..].join(" ")
    );
    emit(
        cli,
        text,
        json!({
            "n_vars": ext.n_vars(),
            "new_vars": &ext.vars[arr.n_vars()..],
            "depth": after,
        }),
    );
    Ok(())
}

fn cmd_sr(cli: &Cli) -> Result<(), Failure> {
    let cx = parse_squarefree(&read_input(cli)?).map_err(|e| Failure::input(e.to_string()))?;
    let peel = match recognize_two_linear(&cx) {
        Recognition::Accept(p) => p,
        Recognition::Reject(reason) => {
            emit(
                cli,
                format!("not 2-linear: {reason}"),
                json!({ "two_linear": false, "reason": reason }),
            );
            return Err(Failure::verdict(format!("not 2-linear: {reason}")));
        }
    };
    let (arr, order) =
        facet_order_to_arrangement(&cx, &peel).map_err(|e| Failure::input(e.to_string()))?;
    let dec = decomposition_of(&arr)?;
    let tab = build_tableau(&dec).map_err(|e| Failure::verdict(e.to_string()))?;
    let rep =
        invariant_report(&arr, &dec, Some(&tab)).map_err(|e| Failure::input(e.to_string()))?;
    let mut text = format!(
        "2-linear: yes ({}tree, d = {})\nfacet order: {}\nlines: {}, ara: {}, depth: {}, reg: {}\n",
        if peel.is_d_tree { "d-" } else { "generalized " },
        peel.d,
        order
            .iter()
            .map(|&f| format!("F{}", f + 1))
            .collect::<Vec<_>>()
            .join(" -> "),
        tab.line_count(),
        rep.ara,
        rep.depth,
        rep.reg,
    );
    for (i, s) in tab.diagonal_sums().iter().enumerate() {
        text += &format!("  q{} = {s}\n", i + 1);
    }
    if cli.oracle == Toggle::On && cx.n_vertices() <= cli.max_vars {
        let inv = oracle_invariants(cx.n_vertices(), &cx.minimal_nonfaces())?;
        if inv.projdim as i64 != rep.projdim || !inv.two_linear {
            return Err(Failure::verdict(format!(
                "oracle disagrees: projdim {} vs {}, two_linear {}",
                inv.projdim, rep.projdim, inv.two_linear
            )));
        }
        text += &format!("oracle: projdim {} confirmed, reg(S/I) = {}\n", inv.projdim, inv.reg);
    }
    let mut payload = tableau_payload(&arr, &dec, &tab);
    payload.as_object_mut().unwrap().extend(
        json!({
            "two_linear": true,
            "d": peel.d,
            "is_d_tree": peel.is_d_tree,
            "depth": rep.depth,
            "reg": rep.reg,
        })
        .as_object()
        .cloned()
        .unwrap(),
    );
    emit(cli, text, payload);
    Ok(())
}

fn cmd_ferrer(cli: &Cli, lambda: Option<&str>) -> Result<(), Failure> {
    let src = match lambda {
        Some(s) => s.to_string(),
        None => read_input(cli)?,
    };
    let shape = FerrerShape::parse(&src).map_err(|e| Failure::input(e.to_string()))?;
    let rep = ferrer(&shape);
    let gens: Vec<String> = rep.gens.iter().map(|g| g.to_string()).collect();
    let mut text = format!(
        "generators: {}\nprojdim: {}, ara: {}, cd: {}, c: {}\n",
        gens.join(", "),
        rep.projdim,
        rep.ara,
        rep.cd,
        rep.conn
    );
    if cli.oracle == Toggle::On && rep.vars.len() <= cli.max_vars {
        let idx_gens: Vec<Vec<usize>> = rep
            .gens
            .iter()
            .map(|g| g.monomial_support().unwrap())
            .collect();
        let t = hochster_betti_field(
            rep.vars.len(),
            &idx_gens,
            cli.max_vars,
            HomologyField::Rational,
        )?;
        if t.projdim() as i64 != rep.projdim {
            return Err(Failure::verdict(format!(
                "oracle projdim {} disagrees with formula {}",
                t.projdim(),
                rep.projdim
            )));
        }
        text += &format!("oracle: projdim {} confirmed\n", t.projdim());
    }
    emit(
        cli,
        text,
        json!({
            "lambda": shape.lambda,
            "generators": gens,
            "projdim": rep.projdim,
            "ara": rep.ara,
            "cd": rep.cd,
            "c": rep.conn,
        }),
    );
    Ok(())
}

fn cmd_simplicial(cli: &Cli) -> Result<(), Failure> {
    let spec = SimplicialIdealSpec::parse_json(&read_input(cli)?)
        .map_err(|e| Failure::input(e.to_string()))?;
    let rep = simplicial_ideal(&spec).map_err(|e| Failure::input(e.to_string()))?;
    let mut text = String::new();
    for c in &rep.arrangement.components {
        text += &format!(
            "component {}: linear ({}), {} extra generators\n",
            c.name,
            c.linear_part
                .pivots()
                .iter()
                .map(|&v| spec.vars[v].as_str())
                .collect::<Vec<_>>()
                .join(", "),
            c.extra_gens.len()
        );
    }
    let tr: Vec<String> = rep
        .transversal
        .iter()
        .map(|t| {
            t.iter()
                .map(|&v| spec.vars[v].as_str())
                .collect::<Vec<_>>()
                .join("*")
        })
        .collect();
    text += &format!("transversal monomials: {}\n", tr.join(", "));
    text += &format!(
        "hypothesis I_{{k,l}} in (G \\ G_j): {}\n",
        if rep.hypothesis_ok { "holds" } else { "FAILS" }
    );
    for v in &rep.hypothesis_violations {
        text += &format!("  violation: {v}\n");
    }
    if let (Some(dim), Some(deg)) = (rep.dim, rep.deg) {
        text += &format!("dim: {dim}, deg: {deg}\n");
    } else if let Some(dim) = rep.dim {
        text += &format!("dim: {dim}\n");
    }
    emit(
        cli,
        text,
        json!({
            "components": rep.arrangement.components.iter().map(|c| json!({
                "name": c.name,
                "linear": c.linear_part.pivots().iter()
                    .map(|&v| spec.vars[v].clone()).collect::<Vec<_>>(),
                "extra_gens": c.extra_gens.iter()
                    .map(|g| g.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "transversal": tr,
            "hypothesis_ok": rep.hypothesis_ok,
            "dim": rep.dim,
            "deg": rep.deg,
        }),
    );
    if rep.hypothesis_ok {
        Ok(())
    } else {
        Err(Failure::verdict("simplicial hypothesis fails"))
    }
}

fn cmd_betti(cli: &Cli) -> Result<(), Failure> {
    let cx = parse_squarefree(&read_input(cli)?).map_err(|e| Failure::input(e.to_string()))?;
    let gens = cx.minimal_nonfaces();
    let table = hochster_betti_field(
        cx.n_vertices(),
        &gens,
        cli.max_vars,
        HomologyField::Rational,
    )?;
    let mut text = String::new();
    for (&(i, j), &b) in &table.entries {
        text += &format!("beta_{{{i},{j}}} = {b}\n");
    }
    text += &format!(
        "projdim: {}, depth: {}, reg(S/I): {}\n",
        table.projdim(),
        table.depth(),
        table.reg()
    );
    emit(
        cli,
        text,
        json!({
            "betti": table.entries.iter()
                .map(|(&(i, j), &b)| json!([i, j, b])).collect::<Vec<_>>(),
            "projdim": table.projdim(),
            "depth": table.depth(),
            "reg": table.reg(),
        }),
    );
    Ok(())
}

fn cmd_verify_radical(cli: &Cli) -> Result<(), Failure> {
    let arr = parse_arrangement(cli)?;
    let dec = decomposition_of(&arr)?;
    let tab = build_tableau(&dec).map_err(|e| Failure::verdict(e.to_string()))?;
    let mut sums = tab.diagonal_sums();
    sums.extend(dec.d_tail.basis.iter().map(|f| f.to_poly(&arr.vars)));
    let exact = vanishing_and_containment(&sums, &arr, VanishMode::Exact)?;
    let mode = if arr.n_vars() <= 16 {
        VanishMode::Gf2Exhaustive
    } else {
        VanishMode::GfSample {
            p: cli.gf,
            count: 10_000,
            seed: cli.seed,
        }
    };
    let points = vanishing_and_containment(&sums, &arr, mode)?;
    emit(
        cli,
        format!(
            "radical identity evidence: {} ok; {} ok ({} common zeros on the arrangement)",
            exact.mode, points.mode, points.points_checked
        ),
        json!({
            "exact": exact.mode,
            "points_mode": points.mode,
            "points_checked": points.points_checked,
            "ok": true,
        }),
    );
    Ok(())
}

fn cmd_selftest(cli: &Cli) -> Result<(), Failure> {
    let mut failures = 0usize;
    let mut lines = Vec::new();
    let mut check = |name: &str, ok: bool, detail: String| {
        lines.push(format!(
            "{} - {name}{}",
            if ok { "ok" } else { "FAIL" },
            if ok || detail.is_empty() {
                String::new()
            } else {
                format!(": {detail}")
            }
        ));
        if !ok {
            failures += 1;
        }
    };

    // four skew-ish lines: the running example arrangement
    let arr = ljoin::arrangement::example_one();
    let dec = decompose(&arr).unwrap();
    let tab = build_tableau(&dec).unwrap();
    let rep = invariant_report(&arr, &dec, Some(&tab)).unwrap();
    check(
        "four-line arrangement order",
        arr.check_order().ok,
        String::new(),
    );
    let gens: std::collections::BTreeSet<String> = intersection_generators(&arr, &dec, 3)
        .iter()
        .map(|g| g.to_string())
        .collect();
    let expected: std::collections::BTreeSet<String> =
        ["b", "a*c", "a*z - a*u", "a*x", "c*z", "c*y"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    check(
        "partial intersection generators",
        gens == expected,
        format!("{gens:?}"),
    );
    check(
        "four-line invariants (depth 3, reg 2, ara 4, cd 4, c 2)",
        rep.depth == 3 && rep.reg == 2 && rep.ara == 4 && rep.cd == 4 && rep.conn_dim_affine == 2,
        format!("{rep:?}"),
    );
    check(
        "tableau has 4 lines and an SV certificate",
        tab.line_count() == 4 && tab.sv_certificate().is_ok(),
        String::new(),
    );

    for (k, expect) in [(1usize, 4usize), (2, 7), (3, 8)] {
        let cx = sample_complex(k);
        let ok = match recognize_two_linear(&cx) {
            Recognition::Accept(peel) => {
                let (arr, _) = facet_order_to_arrangement(&cx, &peel).unwrap();
                let dec = decompose(&arr).unwrap();
                let tab = build_tableau(&dec).unwrap();
                let lines_ok = tab.line_count() + dec.d_tail.dim() == expect;
                let oracle_ok = if cli.oracle == Toggle::On {
                    oracle_invariants(cx.n_vertices(), &cx.minimal_nonfaces())
                        .map(|inv| inv.projdim == expect && inv.two_linear)
                        .unwrap_or(false)
                } else {
                    true
                };
                lines_ok && oracle_ok
            }
            Recognition::Reject(_) => false,
        };
        check(&format!("sample complex {k} ({expect} lines)"), ok, String::new());
    }

    let fr = ferrer(&FerrerShape::new(vec![3, 2, 2, 1]).unwrap());
    check(
        "Ferrer (3,2,2,1): projdim 4, c 2",
        fr.projdim == 4 && fr.conn == 2,
        String::new(),
    );

    let spec_json = r#"{
      "vars": ["a","b","c","d","e","y1","y2","z1","z2"],
      "parts": [
        {"name":"P1","vertices":["d","b","c","y1","y2"],
         "gens":["b*y2 - y1^2","b*c - y1*y2","y1*c - y2^2"],"meta":{"dim":3}},
        {"name":"P2","vertices":["a","b","c","y1","y2","z1","z2"],
         "gens":["b*y2 - y1^2","b*c - y1*y2","y1*c - y2^2",
                 "a*z2 - z1^2","a*c - z1*z2","z1*c - z2^2"],"meta":{"dim":3}},
        {"name":"P3","vertices":["e","a","c","z1","z2"],
         "gens":["a*z2 - z1^2","a*c - z1*z2","z1*c - z2^2"],"meta":{"dim":3}}
      ]
    }"#;
    let spec = SimplicialIdealSpec::parse_json(spec_json).unwrap();
    let srep = simplicial_ideal(&spec).unwrap();
    check(
        "three-part simplicial decomposition",
        srep.hypothesis_ok && srep.transversal.len() == 7,
        String::new(),
    );

    let base = parse_squarefree("facets: {b,c,d} {a,b,c} {a,c,e}").unwrap();
    let ara = ljoin::monomial::simplicial_ara(
        &base,
        &[3, 0, 3],
        &[3, 0, 3],
        &[true, true, true],
        &[true, true, true],
    )
    .unwrap();
    check(
        "height-8 squeeze gives an stci verdict",
        ara.ht == 8 && ara.upper_bound == Some(8) && ara.stci == Some(true),
        String::new(),
    );

    let text = lines.join("\n");
    emit(
        cli,
        text,
        json!({ "checks": lines, "failures": failures }),
    );
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::verdict(format!("{failures} selftest check(s) failed")))
    }
}
