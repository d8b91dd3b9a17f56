//! Command-line surface: counts, edge counts, sequences, graph export, and
//! the cross-verification sweep.
//!
//! Exit statuses: 0 success, 1 verification counterexample, 2 usage error,
//! 3 capacity exceeded, 4 output I/O failure.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::counting::{
    count_containing, count_independent_closed, count_independent_k,
    count_independent_recurrence, edges_convolution, edges_rank_weighted, h_fibonacci,
    extended_count, PathPower, SequenceWindow,
};
use crate::enumeration::enumerate_independent;
use crate::hasse::{build_hasse, HasseGraph};
use crate::oracle::{
    brute_count, brute_count_containing, brute_count_k, brute_edge_count, ORACLE_COUNT_CAP,
    ORACLE_EDGE_CAP,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;
pub const EXIT_IO: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "fibocube",
    about = "Independent subsets of path powers: counts, Hasse diagrams, and cross-checks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of independent subsets, or of independent k-subsets.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Print the number of edges of the Hasse diagram.
    Edges {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        h: u64,
        #[arg(long, value_enum)]
        method: EdgeMethod,
    },
    /// Print a sequence prefix, one value per line.
    Sequence {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        limit: u64,
        #[arg(long, value_enum)]
        kind: SequenceKind,
    },
    /// Export the Hasse diagram.
    Graph {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        h: u64,
        #[arg(long, value_enum)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check every identity against the brute-force oracle.
    Verify {
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        max_h: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EdgeMethod {
    /// Rank-weighted sum of binomial counts.
    Closed,
    /// Self-convolution of the h-Fibonacci sequence.
    Convolution,
    /// Count edges of the materialized graph.
    Graph,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SequenceKind {
    /// p_0 .. p_{limit-1}: independent-subset counts.
    P,
    /// F_1 .. F_limit: the h-Fibonacci sequence.
    Fib,
    /// H_0 .. H_{limit-1}: Hasse-diagram edge counts.
    Edges,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Edges,
    Json,
}

impl Cli {
    pub fn run(self) -> u8 {
        match self.command {
            Command::Count { n, h, k } => {
                let p = PathPower::new(n, h);
                let value = match k {
                    Some(k) => count_independent_k(p, k),
                    None => count_independent_closed(p),
                };
                println!("{value}");
                EXIT_OK
            }
            Command::Edges { n, h, method } => {
                let p = PathPower::new(n, h);
                let value = match method {
                    EdgeMethod::Closed => edges_rank_weighted(p),
                    EdgeMethod::Convolution => edges_convolution(p),
                    EdgeMethod::Graph => match build_hasse(p) {
                        Ok(g) => BigUint::from(g.edge_count()),
                        Err(e) => {
                            eprintln!("error: {e}");
                            return EXIT_CAPACITY;
                        }
                    },
                };
                println!("{value}");
                EXIT_OK
            }
            Command::Sequence { h, limit, kind } => {
                if limit < 1 {
                    eprintln!("error: --limit must be at least 1");
                    return EXIT_USAGE;
                }
                for value in sequence_values(h, limit, kind) {
                    println!("{value}");
                }
                EXIT_OK
            }
            Command::Graph { n, h, format, out } => {
                let g = match build_hasse(PathPower::new(n, h)) {
                    Ok(g) => g,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_CAPACITY;
                    }
                };
                let rendered = match format {
                    GraphFormat::Dot => render_dot(&g),
                    GraphFormat::Edges => render_edge_list(&g),
                    GraphFormat::Json => render_json(&g),
                };
                match out {
                    Some(path) => {
                        if let Err(e) = std::fs::write(&path, rendered) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return EXIT_IO;
                        }
                        EXIT_OK
                    }
                    None => {
                        print!("{rendered}");
                        EXIT_OK
                    }
                }
            }
            Command::Verify { max_n, max_h } => {
                if max_n > ORACLE_COUNT_CAP {
                    eprintln!(
                        "error: --max-n {max_n} exceeds the oracle cap {ORACLE_COUNT_CAP}"
                    );
                    return EXIT_USAGE;
                }
                run_verify(max_n, max_h)
            }
        }
    }
}

fn sequence_values(h: u64, limit: u64, kind: SequenceKind) -> Vec<BigUint> {
    match kind {
        // p_n = F_{n+h+1}, so the p prefix is a slice of a longer window
        SequenceKind::P => {
            let window = SequenceWindow::generate(h, limit + h + 1);
            window.values()[h as usize..][..limit as usize].to_vec()
        }
        SequenceKind::Fib => SequenceWindow::generate(h, limit).values().to_vec(),
        SequenceKind::Edges => (0..limit)
            .map(|n| edges_convolution(PathPower::new(n, h)))
            .collect(),
    }
}

fn render_edge_list(g: &HasseGraph) -> String {
    let mut out = String::new();
    for &(lower, upper) in g.edges() {
        writeln!(out, "{} {}", g.vertices()[lower], g.vertices()[upper]).unwrap();
    }
    out
}

// DOT forbids empty node names; the n = 0 vertex becomes "ε".
fn dot_label(s: &str) -> &str {
    if s.is_empty() {
        "\u{03b5}"
    } else {
        s
    }
}

fn render_dot(g: &HasseGraph) -> String {
    let labels: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
    let mut out = String::from("digraph hasse {\n");
    for label in &labels {
        writeln!(out, "  \"{}\";", dot_label(label)).unwrap();
    }
    for &(lower, upper) in g.edges() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\";",
            dot_label(&labels[lower]),
            dot_label(&labels[upper])
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphJson {
    n: u64,
    h: u64,
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

fn render_json(g: &HasseGraph) -> String {
    let doc = GraphJson {
        n: g.params().n,
        h: g.params().h,
        vertices: g.vertices().iter().map(|v| v.to_string()).collect(),
        edges: g.edges().to_vec(),
    };
    let mut out = serde_json::to_string(&doc).expect("graph serialization cannot fail");
    out.push('\n');
    out
}

type FamilyResult = Result<(), String>;

fn check_counts(max_n: u64, max_h: u64) -> FamilyResult {
    for n in 0..=max_n {
        for h in 0..=max_h {
            let p = PathPower::new(n, h);
            let closed = count_independent_closed(p);
            let recurrence = count_independent_recurrence(p);
            let brute = brute_count(p).map_err(|e| e.to_string())?;
            if closed != brute || recurrence != brute {
                return Err(format!(
                    "n={n} h={h}: closed={closed} recurrence={recurrence} brute={brute}"
                ));
            }
            for k in 0..=n {
                let formula = count_independent_k(p, k);
                let brute = brute_count_k(p, k).map_err(|e| e.to_string())?;
                if formula != brute {
                    return Err(format!(
                        "n={n} h={h} k={k}: formula={formula} brute={brute}"
                    ));
                }
                let vanishes = formula == BigUint::default();
                if vanishes != (k > p.max_independent_size()) {
                    return Err(format!(
                        "n={n} h={h} k={k}: count vanishes outside the size bound only"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_containing(max_n: u64, max_h: u64) -> FamilyResult {
    for n in 1..=max_n {
        for h in 0..=max_h {
            let p = PathPower::new(n, h);
            for k in 1..=p.max_independent_size() {
                for i in 1..=n {
                    let formula = count_containing(p, k, i).map_err(|e| e.to_string())?;
                    let brute =
                        brute_count_containing(p, k, i).map_err(|e| e.to_string())?;
                    if formula != brute {
                        return Err(format!(
                            "n={n} h={h} k={k} i={i}: formula={formula} brute={brute}"
                        ));
                    }
                    let mirrored =
                        count_containing(p, k, n + 1 - i).map_err(|e| e.to_string())?;
                    if formula != mirrored {
                        return Err(format!(
                            "n={n} h={h} k={k} i={i}: reflection symmetry broken"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_rank_sums(max_n: u64, max_h: u64) -> FamilyResult {
    for n in 1..=max_n {
        for h in 0..=max_h {
            let p = PathPower::new(n, h);
            for k in 1..=p.max_independent_size() {
                let total: BigUint = (1..=n)
                    .map(|i| count_containing(p, k, i).unwrap())
                    .sum();
                let expected = count_independent_k(p, k) * k;
                if total != expected {
                    return Err(format!(
                        "n={n} h={h} k={k}: sum over i gives {total}, expected {expected}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_edges(max_n: u64, max_h: u64) -> FamilyResult {
    let graph_limit = max_n.min(ORACLE_EDGE_CAP);
    for n in 0..=max_n {
        for h in 0..=max_h {
            let p = PathPower::new(n, h);
            let ranked = edges_rank_weighted(p);
            let convolved = edges_convolution(p);
            if ranked != convolved {
                return Err(format!(
                    "n={n} h={h}: rank-weighted={ranked} convolution={convolved}"
                ));
            }
            if n <= graph_limit {
                let built = BigUint::from(
                    build_hasse(p).map_err(|e| e.to_string())?.edge_count(),
                );
                let brute = brute_edge_count(p).map_err(|e| e.to_string())?;
                if built != ranked || brute != ranked {
                    return Err(format!(
                        "n={n} h={h}: formula={ranked} graph={built} brute={brute}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_fibonacci_shift(max_n: u64, max_h: u64) -> FamilyResult {
    let max_m = max_n + max_h + 2;
    for h in 0..=max_h {
        for m in 1..=max_m {
            let fib = h_fibonacci(h, m).map_err(|e| e.to_string())?;
            let shifted = extended_count(m as i64 - h as i64 - 1, h);
            if fib != shifted {
                return Err(format!("h={h} m={m}: F={fib} shifted count={shifted}"));
            }
        }
    }
    Ok(())
}

fn check_structure(max_n: u64, max_h: u64) -> FamilyResult {
    for n in 0..=max_n.min(ORACLE_EDGE_CAP) {
        for h in 0..=max_h {
            let p = PathPower::new(n, h);
            let g = build_hasse(p).map_err(|e| e.to_string())?;
            if g.vertices() != enumerate_independent(p).map_err(|e| e.to_string())? {
                return Err(format!("n={n} h={h}: vertex list differs from enumeration"));
            }
            let degrees = g.down_degrees();
            for (idx, vertex) in g.vertices().iter().enumerate() {
                if !vertex.is_independent(h) {
                    return Err(format!("n={n} h={h}: vertex {vertex} not independent"));
                }
                if degrees[idx] != vertex.cardinality() {
                    return Err(format!(
                        "n={n} h={h}: vertex {vertex} has down-degree {} but cardinality {}",
                        degrees[idx],
                        vertex.cardinality()
                    ));
                }
            }
            for pair in g.edges().windows(2) {
                if pair[0] >= pair[1] {
                    return Err(format!("n={n} h={h}: duplicate or unsorted edge {pair:?}"));
                }
            }
            if g.edges().iter().any(|&(lower, upper)| lower >= upper) {
                return Err(format!("n={n} h={h}: edge not oriented subset to superset"));
            }
        }
    }
    Ok(())
}

fn check_specializations(max_n: u64) -> FamilyResult {
    // h = 0: Boolean lattice; h = 1: classical Fibonacci numbers
    let mut power = BigUint::one();
    for n in 0..=max_n {
        let p = PathPower::new(n, 0);
        if count_independent_closed(p) != power {
            return Err(format!("n={n}: p_n at h=0 is not 2^n"));
        }
        let expected_edges = if n == 0 {
            BigUint::default()
        } else {
            &power / 2u32 * n
        };
        if edges_rank_weighted(p) != expected_edges {
            return Err(format!("n={n}: edges at h=0 is not n*2^(n-1)"));
        }
        power *= 2u32;
    }
    let mut fib = (BigUint::one(), BigUint::one());
    for n in 0..=max_n {
        // fib.1 holds F_{n+2} at the start of iteration n
        if count_independent_closed(PathPower::new(n, 1)) != fib.1 {
            return Err(format!("n={n}: p_n at h=1 is not F_(n+2)"));
        }
        fib = (fib.1.clone(), fib.0 + &fib.1);
    }
    Ok(())
}

fn run_verify(max_n: u64, max_h: u64) -> u8 {
    let families: Vec<(&str, FamilyResult)> = vec![
        (
            "counts: closed form = recurrence = brute force",
            check_counts(max_n, max_h),
        ),
        (
            "containing counts: split formula = brute force, reflection-symmetric",
            check_containing(max_n, max_h),
        ),
        (
            "rank sums: sum over vertices = k * p_{n,k}",
            check_rank_sums(max_n, max_h),
        ),
        (
            "edge counts: rank-weighted = convolution = graph = brute force",
            check_edges(max_n, max_h),
        ),
        (
            "h-Fibonacci shift: F_m = extended count at m-h-1",
            check_fibonacci_shift(max_n, max_h),
        ),
        (
            "structure: vertex order, down-degrees, edge orientation",
            check_structure(max_n, max_h),
        ),
        (
            "specializations: hypercube (h=0) and Fibonacci (h=1)",
            check_specializations(max_n),
        ),
    ];

    let mut failures = 0usize;
    for (name, result) in &families {
        match result {
            Ok(()) => println!("PASS {name}"),
            Err(counterexample) => {
                println!("FAIL {name}: {counterexample}");
                failures += 1;
            }
        }
    }
    println!(
        "{}/{} identity families hold for n <= {max_n}, h <= {max_h}",
        families.len() - failures,
        families.len()
    );
    if failures == 0 {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decimals(values: Vec<BigUint>) -> Vec<String> {
        values.iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn sequence_kinds() {
        assert_eq!(
            decimals(sequence_values(1, 6, SequenceKind::Fib)),
            ["1", "1", "2", "3", "5", "8"]
        );
        assert_eq!(
            decimals(sequence_values(2, 6, SequenceKind::P)),
            ["1", "2", "3", "4", "6", "9"]
        );
        assert_eq!(
            decimals(sequence_values(1, 5, SequenceKind::Edges)),
            ["0", "1", "2", "5", "10"]
        );
    }

    #[test]
    fn edge_list_rendering() {
        let g = build_hasse(PathPower::new(3, 1)).unwrap();
        let rendered = render_edge_list(&g);
        assert_eq!(rendered, "000 001\n000 010\n000 100\n001 101\n100 101\n");
    }

    #[test]
    fn dot_rendering() {
        let g = build_hasse(PathPower::new(2, 1)).unwrap();
        let dot = render_dot(&g);
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.starts_with("digraph hasse {\n"));
        assert!(dot.contains("  \"00\";\n"));
        assert!(dot.contains("  \"00\" -> \"01\";\n"));

        let degenerate = build_hasse(PathPower::new(0, 0)).unwrap();
        assert!(render_dot(&degenerate).contains("\"\u{03b5}\";"));
    }

    #[test]
    fn json_rendering() {
        let g = build_hasse(PathPower::new(2, 1)).unwrap();
        assert_eq!(
            render_json(&g),
            "{\"n\":2,\"h\":1,\"vertices\":[\"00\",\"01\",\"10\"],\"edges\":[[0,1],[0,2]]}\n"
        );

        let degenerate = build_hasse(PathPower::new(0, 3)).unwrap();
        assert_eq!(
            render_json(&degenerate),
            "{\"n\":0,\"h\":3,\"vertices\":[\"\"],\"edges\":[]}\n"
        );
    }

    #[test]
    fn verify_families_hold_on_a_small_sweep() {
        assert_eq!(check_counts(8, 3), Ok(()));
        assert_eq!(check_containing(8, 3), Ok(()));
        assert_eq!(check_rank_sums(8, 3), Ok(()));
        assert_eq!(check_edges(8, 3), Ok(()));
        assert_eq!(check_fibonacci_shift(8, 3), Ok(()));
        assert_eq!(check_structure(8, 3), Ok(()));
        assert_eq!(check_specializations(12), Ok(()));
    }
}
