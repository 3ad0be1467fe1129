//! `dialab`: command-line front end to the dialab library.
//!
//! Exit status is 0 on success, 1 on a domain error and 2 on a usage error.

use std::fmt::Display;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dialab::finalg::fixtures::fixture_capped;
use dialab::finalg::{
    algebra_from_json, algebra_from_json_deferred, algebra_to_json, associativization, bar_units, check_axioms,
    FiniteAlgebra, DEFAULT_MAX_DIM,
};
use dialab::freealg::{
    dend_mul, dend_to_zinb, dias_mul, leib_bracket_free, zinb_mul, DendOp, DendTerm, Sym, ZinbMode,
};
use dialab::homology::{ChainComplex, Source, Theory};
use dialab::operads::{
    compose_report, poincare_check, poincare_check_dims, preset_quadratic, quadratic_dual, sh_relations,
    PoincareReport, QuadraticData,
};
use dialab::parse::{parse_dend, parse_pointed, parse_words};
use dialab::perm::PsiVariant;
use dialab::rational::{fmt_q, parse_q, q_to_json};
use dialab::trees::ExpandMode;
use dialab::{Error, LinComb, Permutation, ProductSymbol, Result, Tree};

#[derive(Parser)]
#[command(name = "dialab", version, about = "Exact computations with dialgebras, dendriform algebras and their homology")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate, count and manipulate planar binary trees.
    Trees(TreesArgs),
    /// The tree of a permutation, or the fiber over a tree.
    Psi(PsiArgs),
    /// Product in the free dendriform algebra.
    DendMul(DendMulArgs),
    /// Product in the free dialgebra.
    DiasMul(DiasMulArgs),
    /// Product in the free Zinbiel algebra.
    ZinbMul(ZinbMulArgs),
    /// Leibniz bracket of free dialgebra or free Leibniz elements.
    Bracket(BracketArgs),
    /// Check the axioms of a finite-dimensional algebra.
    Axioms(AlgebraInput),
    /// Bar-units of a dialgebra.
    Halo(AlgebraInput),
    /// Associative quotient of a dialgebra.
    Assoc(AlgebraInput),
    /// Betti numbers of one of the five complexes.
    Homology(HomologyArgs),
    /// Koszul dual of a binary quadratic non-symmetric operad.
    KoszulDual(KoszulArgs),
    /// Poincaré series and their compositional inverses.
    Poincare(PoincareArgs),
    /// Partial composition of dendriform operations.
    Compose(ComposeArgs),
    /// Relations of a strong homotopy dialgebra.
    ShRelations(ShArgs),
    /// The dendriform-to-Zinbiel map on a tree monomial.
    ZinbMap(ZinbMapArgs),
}

#[derive(Args)]
struct TreesArgs {
    /// Degree for enumeration or counting.
    #[arg(long)]
    n: Option<usize>,
    /// Print only the number of trees of degree n.
    #[arg(long, requires = "n")]
    count: bool,
    /// A tree to operate on, e.g. "[1,3,1]".
    #[arg(long, conflicts_with = "n")]
    tree: Option<String>,
    /// Print the name sequence of --tree.
    #[arg(long, requires = "tree")]
    name: bool,
    /// Remove leaf i of --tree.
    #[arg(long, requires = "tree")]
    face: Option<usize>,
    /// Expand --tree at leaf i.
    #[arg(long, requires = "tree")]
    expand: Option<usize>,
    #[arg(long, value_enum, default_value = "bifurcate")]
    mode: ExpandArg,
    /// Graft two trees: --graft LEFT RIGHT.
    #[arg(long, num_args = 2, value_names = ["LEFT", "RIGHT"], conflicts_with_all = ["n", "tree"])]
    graft: Option<Vec<String>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandArg {
    Bifurcate,
    ParallelLast,
}

#[derive(Args)]
struct PsiArgs {
    /// A permutation in one-line notation, e.g. "[3,1,2]".
    #[arg(long, required_unless_present = "fiber")]
    perm: Option<String>,
    /// Use the height coding.
    #[arg(long)]
    prime: bool,
    /// List the permutations over a tree.
    #[arg(long, conflicts_with = "perm")]
    fiber: Option<String>,
}

#[derive(Args)]
struct DendMulArgs {
    #[arg(long, value_enum, default_value = "star")]
    op: DendOpArg,
    /// Left factor, e.g. "([1]; x) + 2*([2,1]; x y)".
    a: String,
    b: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum DendOpArg {
    Prec,
    Succ,
    Star,
}

#[derive(Args)]
struct DiasMulArgs {
    #[arg(long, value_enum)]
    op: SideArg,
    /// Left factor, e.g. "x1^ x2 - x2 x1^".
    a: String,
    b: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Args)]
struct ZinbMulArgs {
    /// Use the symmetrized (shuffle) product.
    #[arg(long)]
    symmetrized: bool,
    /// Left factor, e.g. "x y + z".
    a: String,
    b: String,
}

#[derive(Args)]
struct BracketArgs {
    #[arg(long, value_enum, default_value = "dias")]
    algebra: BracketAlgebra,
    a: String,
    b: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum BracketAlgebra {
    /// `[x,y] = x⊣y − y⊢x` on pointed words.
    Dias,
    /// The free Leibniz algebra on words.
    Leib,
}

#[derive(Args)]
struct AlgebraInput {
    /// JSON algebra file.
    #[arg(long, required_unless_present = "fixture")]
    file: Option<String>,
    /// A named fixture instead of a file.
    #[arg(long, conflicts_with = "file")]
    fixture: Option<String>,
}

#[derive(Args)]
struct HomologyArgs {
    #[arg(long, value_parser = Theory::from_name)]
    theory: Theory,
    #[arg(long, conflicts_with_all = ["fixture", "free"])]
    file: Option<String>,
    #[arg(long, conflicts_with = "free")]
    fixture: Option<String>,
    /// Use the free algebra of the theory's kind.
    #[arg(long, requires = "dim_v")]
    free: bool,
    /// Number of generators of the free algebra.
    #[arg(long)]
    dim_v: Option<usize>,
    /// Weight piece of the free algebra; all weights up to --max-degree when omitted.
    #[arg(long, requires = "free")]
    weight: Option<usize>,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
}

#[derive(Args)]
struct KoszulArgs {
    #[arg(long, required_unless_present = "file")]
    preset: Option<String>,
    /// JSON quadratic data file.
    #[arg(long, conflicts_with = "preset")]
    file: Option<String>,
}

#[derive(Args)]
struct PoincareArgs {
    #[arg(long, required_unless_present = "dims")]
    preset: Option<String>,
    /// Comma-separated dimensions d_1, d_2, … instead of a preset.
    #[arg(long, conflicts_with = "preset")]
    dims: Option<String>,
    #[arg(long, default_value_t = 10)]
    degree: usize,
    /// Check g_dual(g(x)) = x.
    #[arg(long, requires = "preset")]
    check_inverse: bool,
}

#[derive(Args)]
struct ComposeArgs {
    #[arg(long)]
    outer: String,
    #[arg(long)]
    pos: usize,
    #[arg(long)]
    inner: String,
}

#[derive(Args)]
struct ShArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated degrees |a_1|, …, |a_n| to instantiate the signs.
    #[arg(long)]
    degrees: Option<String>,
}

#[derive(Args)]
struct ZinbMapArgs {
    #[arg(long)]
    tree: String,
    /// Generators, one per leaf slot; defaults to x1 … xn.
    #[arg(long)]
    word: Option<String>,
}

/// Text and JSON renderings of one command's result.
struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Result<Output> {
    Ok(Output { text: text.into(), json })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match run(&cli.command) {
        Ok(o) => {
            if cli.json {
                println!("{}", o.json);
            } else {
                println!("{}", o.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
    }
}

fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Trees(a) => trees(a),
        Command::Psi(a) => psi(a),
        Command::DendMul(a) => {
            let op = match a.op {
                DendOpArg::Prec => DendOp::Prec,
                DendOpArg::Succ => DendOp::Succ,
                DendOpArg::Star => DendOp::Star,
            };
            lincomb_output(&dend_mul(&parse_dend(&a.a)?, &parse_dend(&a.b)?, op)?)
        }
        Command::DiasMul(a) => {
            let side = match a.op {
                SideArg::Left => ProductSymbol::LeftPointer,
                SideArg::Right => ProductSymbol::RightPointer,
            };
            lincomb_output(&dias_mul(&parse_pointed(&a.a)?, &parse_pointed(&a.b)?, side))
        }
        Command::ZinbMul(a) => {
            let mode = if a.symmetrized { ZinbMode::Symmetrized } else { ZinbMode::Dot };
            lincomb_output(&zinb_mul(&parse_words(&a.a)?, &parse_words(&a.b)?, mode))
        }
        Command::Bracket(a) => match a.algebra {
            BracketAlgebra::Dias => {
                let (x, y) = (parse_pointed(&a.a)?, parse_pointed(&a.b)?);
                let left = dias_mul(&x, &y, ProductSymbol::LeftPointer);
                lincomb_output(&(left - dias_mul(&y, &x, ProductSymbol::RightPointer)))
            }
            BracketAlgebra::Leib => lincomb_output(&leib_bracket_free(&parse_words(&a.a)?, &parse_words(&a.b)?)),
        },
        Command::Axioms(a) => axioms(a),
        Command::Halo(a) => halo(a),
        Command::Assoc(a) => {
            let d = load_algebra(a, true)?.as_dialgebra()?;
            let q = associativization(&d)?;
            let text = serde_json::to_string_pretty(&algebra_to_json(&q.algebra)).expect("serializable");
            out(text, algebra_to_json(&q.algebra))
        }
        Command::Homology(a) => homology(a),
        Command::KoszulDual(a) => koszul(a),
        Command::Poincare(a) => poincare(a),
        Command::Compose(a) => {
            let r = compose_report(&parse_tree(&a.outer)?, a.pos, &parse_tree(&a.inner)?)?;
            let names = |s: &std::collections::BTreeSet<Tree>| s.iter().map(Tree::to_string).collect::<Vec<_>>();
            let text = format!(
                "{} ∘{} {} = {}\nnested (standard): {}\nnested (mirrored): {}",
                r.outer,
                r.slot,
                r.inner,
                r.result,
                names(&r.standard).join(" + "),
                names(&r.mirrored).join(" + ")
            );
            out(text, r.to_json())
        }
        Command::ShRelations(a) => sh(a),
        Command::ZinbMap(a) => zinb_map(a),
    }
}

fn parse_tree(s: &str) -> Result<Tree> {
    s.parse()
}

fn max_dim() -> Result<usize> {
    match std::env::var("DIALAB_MAX_DIM") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("DIALAB_MAX_DIM must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))
}

/// Loads `--file` or `--fixture`; `checked` rejects algebras whose axioms fail.
fn load(file: &Option<String>, fixture: &Option<String>, checked: bool) -> Result<FiniteAlgebra> {
    let cap = max_dim()?;
    let a = match (file, fixture) {
        (Some(path), _) => {
            let text = read_file(path)?;
            if checked {
                algebra_from_json(&text)?
            } else {
                algebra_from_json_deferred(&text)?
            }
        }
        (None, Some(name)) => fixture_capped(name, cap)?,
        (None, None) => return Err(Error::InvalidArgument("need --file or --fixture".into())),
    };
    a.check_dim(cap)?;
    Ok(a)
}

fn load_algebra(a: &AlgebraInput, checked: bool) -> Result<FiniteAlgebra> {
    load(&a.file, &a.fixture, checked)
}

fn lincomb_output<B: Ord + Clone + Display>(c: &LinComb<B>) -> Result<Output> {
    let terms: Vec<Value> =
        c.iter().map(|(b, x)| json!({ "coef": q_to_json(x), "basis": b.to_string() })).collect();
    out(c.to_string(), json!({ "result": c.to_string(), "terms": terms }))
}

fn trees(a: &TreesArgs) -> Result<Output> {
    if let Some(g) = &a.graft {
        let t = Tree::graft(parse_tree(&g[0])?, parse_tree(&g[1])?);
        return out(t.to_string(), json!({ "tree": t.to_string() }));
    }
    if let Some(n) = a.n {
        if a.count {
            let c = dialab::trees::catalan(n);
            let count = u64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::from(c.to_string()));
            return out(c.to_string(), json!({ "n": n, "count": count }));
        }
        let all: Vec<String> = Tree::enumerate(n).iter().map(Tree::to_string).collect();
        return out(all.join("\n"), json!({ "n": n, "trees": all }));
    }
    let Some(t) = &a.tree else {
        return Err(Error::InvalidArgument("need --n, --tree or --graft".into()));
    };
    let y = parse_tree(t)?;
    if let Some(i) = a.face {
        let z = y.face(i)?;
        return out(z.to_string(), json!({ "tree": y.to_string(), "face": i, "result": z.to_string() }));
    }
    if let Some(i) = a.expand {
        let mode = match a.mode {
            ExpandArg::Bifurcate => ExpandMode::Bifurcate,
            ExpandArg::ParallelLast => ExpandMode::ParallelLast,
        };
        let z = y.expand(i, mode)?;
        return out(z.to_string(), json!({ "tree": y.to_string(), "expand": i, "result": z.to_string() }));
    }
    let name = y.name();
    if a.name {
        let text = format!("[{}]", name.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
        return out(text, json!({ "tree": y.to_string(), "name": name }));
    }
    let symbols: Vec<&str> = (1..y.degree())
        .map(|i| match y.product_symbol(i).expect("in range") {
            ProductSymbol::LeftPointer => "⊣",
            ProductSymbol::RightPointer => "⊢",
        })
        .collect();
    let text = format!("{}\ndegree {}\nname {name:?}\nproducts {}", y, y.degree(), symbols.join(" "));
    out(text, json!({ "tree": y.to_string(), "degree": y.degree(), "name": name, "products": symbols }))
}

fn psi(a: &PsiArgs) -> Result<Output> {
    let variant = if a.prime { PsiVariant::Height } else { PsiVariant::Depth };
    if let Some(t) = &a.fiber {
        let y = parse_tree(t)?;
        let perms: Vec<String> = Permutation::fiber(&y, variant).iter().map(Permutation::to_string).collect();
        return out(perms.join("\n"), json!({ "tree": y.to_string(), "fiber": perms }));
    }
    let s: Permutation = a.perm.as_deref().unwrap_or_default().parse()?;
    let y = s.psi_variant(variant);
    out(y.to_string(), json!({ "perm": s.to_string(), "tree": y.to_string() }))
}

fn axioms(a: &AlgebraInput) -> Result<Output> {
    let alg = load_algebra(a, false)?;
    let b = alg.basis();
    let v = check_axioms(&alg);
    let rows: Vec<Value> = v
        .iter()
        .map(|v| {
            let (x, y, z) = v.witness;
            json!({ "axiom": v.axiom, "witness": [b[x], b[y], b[z]] })
        })
        .collect();
    let text = if v.is_empty() {
        format!("OK: all {} axioms hold", alg.kind())
    } else {
        v.iter()
            .map(|v| format!("FAIL {} on ({}, {}, {})", v.axiom, b[v.witness.0], b[v.witness.1], b[v.witness.2]))
            .collect::<Vec<_>>()
            .join("\n")
    };
    out(text, json!({ "kind": alg.kind().name(), "holds": v.is_empty(), "violations": rows }))
}

fn vector(v: &[dialab::Q]) -> Value {
    Value::Array(v.iter().map(q_to_json).collect())
}

fn vector_text(v: &[dialab::Q]) -> String {
    format!("({})", v.iter().map(fmt_q).collect::<Vec<_>>().join(", "))
}

fn halo(a: &AlgebraInput) -> Result<Output> {
    let d = load_algebra(a, true)?.as_dialgebra()?;
    let h = bar_units(&d)?;
    let dirs: Vec<Value> = h.directions.iter().map(|v| vector(v)).collect();
    let text = match &h.particular {
        None => "no bar-units".to_string(),
        Some(p) => {
            let mut s = format!("bar-units: {} + span of {} vectors", vector_text(p), h.directions.len());
            for v in &h.directions {
                s.push_str(&format!("\n  {}", vector_text(v)));
            }
            s
        }
    };
    out(
        text,
        json!({
            "basis": d.basis(),
            "empty": h.is_empty(),
            "particular": h.particular.as_deref().map(vector),
            "directions": dirs,
        }),
    )
}

fn homology(a: &HomologyArgs) -> Result<Output> {
    let theory = a.theory;
    let mut per_weight: Vec<(usize, Vec<usize>)> = Vec::new();
    if a.free {
        let dim_v = a.dim_v.unwrap_or(1);
        let weights: Vec<usize> = match a.weight {
            Some(w) => vec![w],
            None => (1..=a.max_degree).collect(),
        };
        for w in weights {
            let c = ChainComplex::build(theory, &Source::Free { kind: theory.kind(), dim_v, weight: w }, a.max_degree + 1)?;
            let mut b = c.betti();
            b.resize(a.max_degree, 0);
            per_weight.push((w, b));
        }
    } else {
        let alg = load(&a.file, &a.fixture, true)?;
        let c = ChainComplex::build(theory, &Source::Finite(alg), a.max_degree + 1)?;
        let mut b = c.betti();
        b.resize(a.max_degree, 0);
        per_weight.push((0, b));
    }
    let mut total = vec![0usize; a.max_degree];
    for (_, b) in &per_weight {
        for (t, x) in total.iter_mut().zip(b) {
            *t += x;
        }
    }
    let table = |b: &[usize]| -> serde_json::Map<String, Value> {
        b.iter().enumerate().map(|(i, x)| ((i + 1).to_string(), json!(x))).collect()
    };
    let mut j = json!({ "theory": theory.name(), "betti": table(&total) });
    let mut text = format!("{} homology\n", theory.name());
    text.push_str(&(1..=a.max_degree).map(|n| format!("H_{n}")).collect::<Vec<_>>().join("\t"));
    text.push('\n');
    text.push_str(&total.iter().map(usize::to_string).collect::<Vec<_>>().join("\t"));
    if a.free {
        let weights: serde_json::Map<String, Value> =
            per_weight.iter().map(|(w, b)| (w.to_string(), Value::Object(table(b)))).collect();
        j["weights"] = Value::Object(weights);
        for (w, b) in &per_weight {
            text.push_str(&format!("\nweight {w}: {}", b.iter().map(usize::to_string).collect::<Vec<_>>().join("\t")));
        }
    }
    out(text, j)
}

fn koszul(a: &KoszulArgs) -> Result<Output> {
    let data = match (&a.preset, &a.file) {
        (Some(p), _) => preset_quadratic(p)?,
        (None, Some(f)) => QuadraticData::from_json(&read_file(f)?)?,
        (None, None) => return Err(Error::InvalidArgument("need --preset or --file".into())),
    };
    let dual = quadratic_dual(&data);
    let mut text = format!("{} relations in the dual:", dual.relations().len());
    for r in dual.relation_strings() {
        text.push_str(&format!("\n  {r}"));
    }
    out(text, dual.to_json())
}

fn series_json(s: &dialab::operads::Series) -> Value {
    json!({ "coefficients": s.coeffs().iter().map(q_to_json).collect::<Vec<_>>(), "text": s.to_string() })
}

fn poincare(a: &PoincareArgs) -> Result<Output> {
    let r: PoincareReport = match (&a.preset, &a.dims) {
        (Some(p), _) => poincare_check(p, a.degree)?,
        (None, Some(d)) => {
            let dims = d.split(',').map(parse_q).collect::<Result<Vec<_>>>()?;
            poincare_check_dims(&dims, a.degree)?
        }
        (None, None) => return Err(Error::InvalidArgument("need --preset or --dims".into())),
    };
    let title = |s: &str| {
        let mut c = s.chars();
        c.next().map(|f| f.to_uppercase().chain(c).collect::<String>()).unwrap_or_default()
    };
    let mut j = json!({
        "name": r.name,
        "degree": r.degree,
        "series": series_json(&r.series),
        "reversion": series_json(&r.reversion),
        "reversion_admissible": r.reversion_admissible,
        "closed_form_ok": r.closed_form_ok,
    });
    let text = if a.check_inverse {
        let (dual_name, _, composite) = r.dual.as_ref().expect("presets carry their dual");
        let ok = r.inverse_ok == Some(true);
        let line = format!(
            "{}: g_{}(g_{}(x)) = {} mod x^{}",
            if ok { "OK" } else { "MISMATCH" },
            title(dual_name),
            title(&r.name),
            if ok { "x".to_string() } else { composite.to_string() },
            r.degree + 1
        );
        j["check_inverse"] = json!({ "ok": ok, "dual": dual_name, "composite": series_json(composite), "message": line });
        line
    } else {
        let mut t = format!("g_{}(x) = {}\nreversion = {}", title(&r.name), r.series, r.reversion);
        if let Some((dual_name, dual, _)) = &r.dual {
            j["dual"] = json!({ "name": dual_name, "series": series_json(dual) });
            t.push_str(&format!("\ng_{}(x) = {}", title(dual_name), dual));
        }
        t
    };
    out(text, j)
}

fn sh(a: &ShArgs) -> Result<Output> {
    let rels = sh_relations(a.n)?;
    let degrees: Option<Vec<i64>> = match &a.degrees {
        None => None,
        Some(d) => Some(
            d.split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad degree {t:?}"))))
                .collect::<Result<_>>()?,
        ),
    };
    let mut text = Vec::new();
    let mut rows = Vec::new();
    for r in &rels {
        let mut j = r.to_json();
        match &degrees {
            None => text.push(r.to_string()),
            Some(d) => {
                let terms = r.instantiate(d)?;
                let line = terms
                    .iter()
                    .map(|(c, op)| format!("{}{op}", if c.is_integer() && *c.numer() < 0.into() { "- " } else { "+ " }))
                    .collect::<Vec<_>>()
                    .join(" ");
                text.push(format!("{}: {} = 0", r.tree, line.trim_start_matches("+ ")));
                j["instantiated"] =
                    Value::Array(terms.iter().map(|(c, op)| json!({ "sign": q_to_json(c), "operation": op })).collect());
            }
        }
        rows.push(j);
    }
    out(text.join("\n"), json!({ "n": a.n, "relations": rows }))
}

fn zinb_map(a: &ZinbMapArgs) -> Result<Output> {
    let y = parse_tree(&a.tree)?;
    let word: Vec<Sym> = match &a.word {
        Some(w) => w.split_whitespace().map(Sym::new).collect(),
        None => Sym::generators(y.degree()),
    };
    let t = DendTerm::new(y, word)?;
    let image = dend_to_zinb(&LinComb::basis(t.clone()))?;
    let mut o = lincomb_output(&image)?;
    o.json["input"] = json!(t.to_string());
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use dialab::finalg::Kind;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn kind_names_round_trip() {
        for k in [Kind::Dialgebra, Kind::Dendriform, Kind::Zinbiel, Kind::Leibniz] {
            assert_eq!(Kind::from_name(k.name()).unwrap(), k);
        }
    }
}
