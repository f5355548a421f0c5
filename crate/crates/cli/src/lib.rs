//! Command-line front end for `stochpoly`. Matrices are read in the SMX text
//! format (header `m n`, then `m` rows of rationals; `#` lines are comments).

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use stochpoly::bases::{
    basis_centro_even, basis_centro_odd, basis_rect, basis_square, dimension_centro, dimension_stochastic, verify_basis,
};
use stochpoly::combination::Dense;
use stochpoly::decompose::{decompose_centrosymmetric, decompose_stochastic};
use stochpoly::extremes::{
    enumerate_extreme_centro_capped, enumerate_extreme_stochastic_capped, is_extreme_centro, is_extreme_stochastic,
    DEFAULT_ENUMERATION_CAP,
};
use stochpoly::faces::{
    count_face_vertices_centro, count_face_vertices_stochastic, enumerate_face_vertices_capped, has_row_support_centro,
    has_row_support_stochastic,
};
use stochpoly::graph::{bipartite_of, fill, is_forest, longest_path};
use stochpoly::smx::{emit_matrix, parse_matrix};
use stochpoly::{rank_of_family, BipartiteGraph, ConvexCombination, Error, FacePattern, Matrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "stochpoly",
    version,
    about = "Exact computations on stochastic matrix polytopes"
)]
pub struct Cli {
    /// Emit JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse enumerations producing more than N items.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
    /// Read the input matrix from FILE instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report stochasticity, centrosymmetry and extremality of the input.
    Check,
    /// Write the input as a convex combination of extreme points.
    Decompose {
        /// Use extreme points of the centrosymmetric polytope.
        #[arg(long)]
        centro: bool,
    },
    /// List extreme points for a given shape.
    Enumerate {
        #[arg(long, required = true)]
        extremes: bool,
        #[arg(long)]
        centro: bool,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Build an affine basis made of extreme points.
    Basis {
        #[arg(long, value_enum)]
        set: BasisSet,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Report the exact rank of the family.
        #[arg(long)]
        verify: bool,
    },
    /// Describe the bipartite graph of the input's nonzero pattern.
    Graph {
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
        /// Report the fill |E|/(mn).
        #[arg(long)]
        fill: bool,
    },
    /// Vertices of the face cut out by a (0,1)-pattern.
    Face {
        #[arg(value_enum)]
        action: FaceAction,
        #[arg(long)]
        centro: bool,
    },
    /// Rewrite a (0,1)-pattern.
    Normalize {
        /// Replace B by B AND B^pi.
        #[arg(long, required = true)]
        centro_and: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisSet {
    Square,
    Rect,
    CentroEven,
    CentroOdd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FaceAction {
    Count,
    Vertices,
    Support,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

/// Runs one invocation and returns the process exit status.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<Matrix, Failure> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            text
        }
    };
    Ok(parse_matrix(&text)?)
}

fn read_pattern(cli: &Cli, stdin: &mut dyn Read) -> Result<FacePattern, Failure> {
    Ok(FacePattern::from_matrix(&read_input(cli, stdin)?)?)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    match &cli.command {
        Command::Check => check(cli, &read_input(cli, stdin)?),
        Command::Decompose { centro } => decompose(cli, &read_input(cli, stdin)?, *centro),
        Command::Enumerate { centro, m, n, .. } => enumerate(cli, *m, *n, *centro),
        Command::Basis { set, m, n, verify } => basis(cli, *set, *m, *n, *verify),
        Command::Graph { dot, fill } => graph(cli, &read_input(cli, stdin)?, *dot, *fill),
        Command::Face { action, centro } => face(cli, &read_pattern(cli, stdin)?, *action, *centro),
        Command::Normalize { .. } => normalize(cli, &read_pattern(cli, stdin)?),
    }
}

fn matrix_json(a: &Matrix) -> Value {
    Value::Array(
        a.row_iter()
            .map(|row| Value::Array(row.iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    )
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are plain JSON");
    s.push('\n');
    s
}

fn matrices_text(mats: &[Matrix]) -> String {
    mats.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("\n")
}

fn check(cli: &Cli, a: &Matrix) -> Result<String, Failure> {
    let stochastic = a.is_stochastic();
    let centro = a.is_centrosymmetric();
    let fields = [
        ("stochastic", stochastic),
        ("centrosymmetric", centro),
        ("extreme_stochastic", stochastic && is_extreme_stochastic(a)),
        ("extreme_centrosymmetric", stochastic && centro && is_extreme_centro(a)),
    ];
    if cli.json {
        let map = fields.iter().map(|(k, v)| (k.to_string(), Value::Bool(*v))).collect();
        return Ok(json_text(&Value::Object(map)));
    }
    Ok(fields.iter().map(|(k, v)| format!("{k}: {v}\n")).collect())
}

fn combination_output<T: Dense>(cli: &Cli, combo: &ConvexCombination<T>) -> String {
    if cli.json {
        let terms: Vec<Value> = combo
            .iter()
            .map(|t| json!({ "coefficient": t.coefficient.to_string(), "matrix": matrix_json(&t.matrix.to_dense()) }))
            .collect();
        return json_text(&json!({ "terms": terms }));
    }
    let mut s = String::new();
    for (k, t) in combo.iter().enumerate() {
        if k > 0 {
            s.push('\n');
        }
        let _ = writeln!(s, "term {}: coefficient {}", k + 1, t.coefficient);
        s.push_str(&t.matrix.to_dense().to_string());
    }
    s
}

fn decompose(cli: &Cli, a: &Matrix, centro: bool) -> Result<String, Failure> {
    Ok(if centro {
        combination_output(cli, &decompose_centrosymmetric(a)?)
    } else {
        combination_output(cli, &decompose_stochastic(a)?)
    })
}

fn matrix_list_output(cli: &Cli, mats: &[Matrix]) -> String {
    if cli.json {
        let list: Vec<Value> = mats.iter().map(matrix_json).collect();
        json_text(&json!({ "count": mats.len(), "matrices": list }))
    } else {
        let mut s = matrices_text(mats);
        if !mats.is_empty() {
            s.push('\n');
        }
        let _ = writeln!(s, "count={}", mats.len());
        s
    }
}

fn enumerate(cli: &Cli, m: usize, n: usize, centro: bool) -> Result<String, Failure> {
    let mats: Vec<Matrix> = if centro {
        enumerate_extreme_centro_capped(m, n, cli.cap)?.collect()
    } else {
        enumerate_extreme_stochastic_capped(m, n, cli.cap)?
            .map(|p| p.to_matrix())
            .collect()
    };
    Ok(matrix_list_output(cli, &mats))
}

fn basis(cli: &Cli, set: BasisSet, m: Option<usize>, n: usize, verify: bool) -> Result<String, Failure> {
    let need_m = || m.ok_or_else(|| Failure::Usage(format!("--m is required for --set {set:?}").to_lowercase()));
    let (family, dim) = match set {
        BasisSet::Square => {
            if m.is_some_and(|m| m != n) {
                return Err(Failure::Usage("square basis needs --m equal to --n".into()));
            }
            (basis_square(n)?, dimension_stochastic(n, n))
        }
        BasisSet::Rect => {
            let m = need_m()?;
            (basis_rect(m, n)?, dimension_stochastic(m, n))
        }
        BasisSet::CentroEven => {
            let m = need_m()?;
            (basis_centro_even(m, n)?, dimension_centro(m, n))
        }
        BasisSet::CentroOdd => {
            let m = need_m()?;
            (basis_centro_odd(m, n)?, dimension_centro(m, n))
        }
    };
    let verdict = if verify {
        Some((rank_of_family(&family)?, verify_basis(&family, dim)?))
    } else {
        None
    };
    if cli.json {
        let list: Vec<Value> = family.iter().map(matrix_json).collect();
        let mut obj = json!({ "dimension": dim, "matrices": list });
        if let Some((rank, ok)) = verdict {
            obj["rank"] = json!(rank);
            obj["independent"] = json!(ok);
        }
        return Ok(json_text(&obj));
    }
    let mut s = matrices_text(&family);
    if let Some((rank, ok)) = verdict {
        let _ = writeln!(s, "\nrank={rank} independent={ok}");
    }
    Ok(s)
}

fn dot_text(g: &BipartiteGraph, fill_label: Option<String>) -> String {
    let mut s = String::from("graph G {\n");
    if let Some(label) = fill_label {
        let _ = writeln!(s, "  label=\"fill={label}\";");
    }
    let rows: Vec<String> = (1..=g.row_count()).map(|i| format!("r{i}")).collect();
    let cols: Vec<String> = (1..=g.col_count()).map(|j| format!("s{j}")).collect();
    let _ = writeln!(s, "  {{ rank=same; {}; }}", rows.join("; "));
    let _ = writeln!(s, "  {{ rank=same; {}; }}", cols.join("; "));
    for (i, j) in g.edges() {
        let _ = writeln!(s, "  r{i} -- s{j};");
    }
    s.push_str("}\n");
    s
}

fn graph(cli: &Cli, a: &Matrix, dot: bool, want_fill: bool) -> Result<String, Failure> {
    let g = bipartite_of(a);
    let fill_value = want_fill.then(|| fill(&g).to_string());
    if dot {
        return Ok(dot_text(&g, fill_value));
    }
    let forest = is_forest(&g);
    let path = if forest { Some(longest_path(&g)?) } else { None };
    let edges: Vec<String> = g.edges().iter().map(|(i, j)| format!("r{i}-s{j}")).collect();
    if cli.json {
        let mut obj = json!({ "edges": edges, "forest": forest, "longest_path": path });
        if let Some(f) = fill_value {
            obj["fill"] = json!(f);
        }
        return Ok(json_text(&obj));
    }
    let mut s = format!("edges: {}\nforest: {forest}\n", edges.join(" "));
    if let Some(p) = path {
        let _ = writeln!(s, "longest_path: {p}");
    }
    if let Some(f) = fill_value {
        let _ = writeln!(s, "fill: {f}");
    }
    Ok(s)
}

fn face(cli: &Cli, b: &FacePattern, action: FaceAction, centro: bool) -> Result<String, Failure> {
    match action {
        FaceAction::Count => {
            let count = if centro {
                count_face_vertices_centro(b)?
            } else {
                count_face_vertices_stochastic(b)?
            };
            Ok(if cli.json {
                json_text(&json!({ "count": count.to_string() }))
            } else {
                format!("{count}\n")
            })
        }
        FaceAction::Vertices => {
            let mats: Vec<Matrix> = enumerate_face_vertices_capped(b, centro, cli.cap)?.collect();
            Ok(matrix_list_output(cli, &mats))
        }
        FaceAction::Support => {
            let ok = if centro {
                has_row_support_centro(b)
            } else {
                has_row_support_stochastic(b)
            };
            Ok(if cli.json {
                json_text(&json!({ "row_support": ok }))
            } else {
                format!("{ok}\n")
            })
        }
    }
}

fn normalize(cli: &Cli, b: &FacePattern) -> Result<String, Failure> {
    let star = b.and_rotated().to_matrix();
    Ok(if cli.json {
        json_text(&json!({ "matrix": matrix_json(&star) }))
    } else {
        emit_matrix(&star)
    })
}
