//! Builders that turn each subcommand into a renderable [`Report`].

use std::fmt;

use binomiacci_core::asymptotics;
use binomiacci_core::bivariate;
use binomiacci_core::sequence;
use binomiacci_core::series;
use binomiacci_core::verify::{self, Suite};

use crate::output::{align_columns, format_real, Report};

/// Which generating function `series` should expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Fib,
    Central,
    Bivariate,
    Row(usize),
}

impl SeriesKind {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "fib" => Ok(SeriesKind::Fib),
            "central" => Ok(SeriesKind::Central),
            "bivariate" => Ok(SeriesKind::Bivariate),
            other => match other.strip_prefix("row:") {
                Some(k) => k
                    .parse()
                    .map(SeriesKind::Row)
                    .map_err(|_| format!("invalid row index in `{other}`")),
                None => Err(format!(
                    "unknown series `{other}` (expected fib, central, bivariate, or row:<k>)"
                )),
            },
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Fib => write!(f, "fib"),
            SeriesKind::Central => write!(f, "central"),
            SeriesKind::Bivariate => write!(f, "bivariate"),
            SeriesKind::Row(k) => write!(f, "row:{k}"),
        }
    }
}

/// `verify` target: one suite or all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteSelection {
    All,
    One(Suite),
}

impl SuiteSelection {
    pub fn parse(s: &str) -> Result<Self, String> {
        if s == "all" {
            Ok(SuiteSelection::All)
        } else {
            s.parse().map(SuiteSelection::One)
        }
    }
}

impl fmt::Display for SuiteSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteSelection::All => write!(f, "all"),
            SuiteSelection::One(suite) => write!(f, "{}", suite.name()),
        }
    }
}

/// Pretty grid with an index header row and k labels; optionally marks
/// the diagonal cells the way the reference table highlights them.
fn grid_pretty(rows: &[&[binomiacci_core::BigInt]], mark_diagonal: bool) -> String {
    let max_n = rows[0].len() - 1;
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(rows.len() + 1);
    let mut header = vec!["k".to_string()];
    header.extend((0..=max_n).map(|n| n.to_string()));
    grid.push(header);
    for (k, row) in rows.iter().enumerate() {
        let mut line = vec![k.to_string()];
        for (n, value) in row.iter().enumerate() {
            if mark_diagonal && n == k {
                line.push(format!("*{value}*"));
            } else {
                line.push(value.to_string());
            }
        }
        grid.push(line);
    }
    align_columns(&grid)
}

pub fn table_report(max_k: usize, max_n: usize, force: bool) -> Report {
    let t = sequence::table(max_k, max_n);
    let mut columns = vec!["k".to_string()];
    columns.extend((0..=max_n).map(|n| format!("n{n}")));
    let rows = (0..=max_k)
        .map(|k| {
            let mut row = vec![k.to_string()];
            row.extend(t.row(k).iter().map(|v| v.to_string()));
            row
        })
        .collect();
    let grid: Vec<&[binomiacci_core::BigInt]> = (0..=max_k).map(|k| t.row(k)).collect();
    Report {
        command: "table",
        params: vec![
            ("rows", max_k.to_string()),
            ("cols", max_n.to_string()),
            ("force", force.to_string()),
        ],
        columns,
        rows,
        pretty: grid_pretty(&grid, true),
    }
}

pub fn triangle_report(row_count: usize) -> Report {
    let triangle: Vec<Vec<binomiacci_core::BigInt>> =
        (0..row_count).map(sequence::triangle_row).collect();

    let columns = vec!["m".to_string(), "k".to_string(), "value".to_string()];
    let mut rows = Vec::new();
    for (m, row) in triangle.iter().enumerate() {
        for (k, value) in row.iter().enumerate() {
            rows.push(vec![m.to_string(), k.to_string(), value.to_string()]);
        }
    }

    let cell_width = triangle
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let rendered: Vec<String> = triangle
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| format!("{:>cell_width$}", v.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let full_width = rendered.last().map(|line| line.len()).unwrap_or(0);
    let mut pretty = String::new();
    for line in &rendered {
        let pad = (full_width - line.len()) / 2;
        pretty.push_str(&" ".repeat(pad));
        pretty.push_str(line);
        pretty.push('\n');
    }

    Report {
        command: "triangle",
        params: vec![("rows", row_count.to_string())],
        columns,
        rows,
        pretty,
    }
}

pub fn series_report(kind: SeriesKind, order: usize, force: bool) -> Report {
    let params = vec![
        ("which", kind.to_string()),
        ("order", order.to_string()),
        ("force", force.to_string()),
    ];
    if let SeriesKind::Bivariate = kind {
        let g = bivariate::bivariate_gf(order, order);
        let mut columns = vec!["k".to_string()];
        columns.extend((0..=order).map(|n| format!("n{n}")));
        let mut rows = Vec::with_capacity(order + 1);
        let mut grid_rows: Vec<Vec<binomiacci_core::BigInt>> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut row = vec![k.to_string()];
            let mut grid_row = Vec::with_capacity(order + 1);
            for n in 0..=order {
                row.push(g.coeff(k, n).to_string());
                grid_row.push(g.coeff(k, n).numer().clone());
            }
            rows.push(row);
            grid_rows.push(grid_row);
        }
        let grid: Vec<&[binomiacci_core::BigInt]> =
            grid_rows.iter().map(|r| r.as_slice()).collect();
        return Report {
            command: "series",
            params,
            columns,
            rows,
            pretty: grid_pretty(&grid, false),
        };
    }

    let expansion = match kind {
        SeriesKind::Fib => series::fibonacci_gf(order),
        SeriesKind::Central => series::central_gf(order),
        SeriesKind::Row(k) => series::row_gf(k, order),
        SeriesKind::Bivariate => unreachable!("handled above"),
    };
    let columns = vec!["n".to_string(), "coefficient".to_string()];
    let rows = (0..=order)
        .map(|n| vec![n.to_string(), expansion.coeff(n).to_string()])
        .collect();
    let pretty = expansion
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
        + "\n";
    Report {
        command: "series",
        params,
        columns,
        rows,
        pretty,
    }
}

pub fn asympt_report(n_max: usize) -> Result<Report, String> {
    let table = asymptotics::ratio_table(n_max).map_err(|e| e.to_string())?;
    let columns = ["n", "exact", "estimate", "ratio"]
        .map(String::from)
        .to_vec();
    let rows: Vec<Vec<String>> = table
        .iter()
        .map(|row| {
            vec![
                row.n.to_string(),
                row.exact.to_string(),
                format_real(row.estimate),
                format_real(row.ratio),
            ]
        })
        .collect();
    let mut grid = vec![columns.clone()];
    grid.extend(rows.iter().cloned());
    Ok(Report {
        command: "asympt",
        params: vec![("max", n_max.to_string())],
        columns,
        rows,
        pretty: align_columns(&grid),
    })
}

pub fn verify_report(selection: SuiteSelection) -> (Report, bool) {
    let checks = match selection {
        SuiteSelection::All => verify::run_all(),
        SuiteSelection::One(suite) => verify::run_suite(suite),
    };
    let all_passed = checks.iter().all(|c| c.passed);

    let columns = ["suite", "check", "status", "max_error", "tolerance"]
        .map(String::from)
        .to_vec();
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.suite.to_string(),
                c.name.to_string(),
                if c.passed { "PASS" } else { "FAIL" }.to_string(),
                format_real(c.max_error),
                format_real(c.tolerance),
            ]
        })
        .collect();

    let name_width = checks
        .iter()
        .map(|c| c.suite.len() + 1 + c.name.len())
        .max()
        .unwrap_or(0);
    let mut pretty = String::new();
    for c in &checks {
        pretty.push_str(&format!(
            "{}  {:<name_width$}  max_error={}  tolerance={}\n",
            if c.passed { "PASS" } else { "FAIL" },
            format!("{}/{}", c.suite, c.name),
            format_real(c.max_error),
            format_real(c.tolerance),
        ));
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    pretty.push_str(&format!(
        "{} checks, {} passed, {} failed\n",
        checks.len(),
        passed,
        checks.len() - passed
    ));

    (
        Report {
            command: "verify",
            params: vec![("suite", selection.to_string())],
            columns,
            rows,
            pretty,
        },
        all_passed,
    )
}
