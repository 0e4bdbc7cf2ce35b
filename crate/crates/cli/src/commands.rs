//! The five subcommands, each producing an [`OutputRecord`].

use linkage_betti_core::{
    average_betti_exact, average_betti_mc, betti_profile, convergence_table, group_values,
    is_generic, slice_ratio, BigRational, LengthVector, Measure,
};

use crate::output::{Cell, OutputRecord};
use crate::CliError;

pub const BETTI_COLUMNS: &[&str] = &["p", "betti", "short", "median", "generic"];
pub const AVERAGE_COLUMNS: &[&str] = &[
    "n",
    "measure",
    "p",
    "exact_rational",
    "exact_decimal",
    "binomial",
    "gap_rational",
    "gap_decimal",
    "terms",
];
pub const CONVERGENCE_COLUMNS: &[&str] = &[
    "n",
    "measure",
    "p",
    "exact_rational",
    "exact_decimal",
    "binomial",
    "gap_decimal",
    "gap_ratio",
];
pub const SAMPLE_COLUMNS: &[&str] = &[
    "n",
    "measure",
    "p",
    "estimate",
    "std_error",
    "samples",
    "seed",
];
pub const SLICE_COLUMNS: &[&str] = &["values", "exact_rational", "exact_decimal", "method"];

/// Above this many bars the exact average prints a cost warning.
pub const EXACT_WARN_N: usize = 16;

/// Fixed column schema of a command, by name.
pub fn columns(command: &str) -> Option<&'static [&'static str]> {
    Some(match command {
        "betti" => BETTI_COLUMNS,
        "average" => AVERAGE_COLUMNS,
        "convergence" => CONVERGENCE_COLUMNS,
        "sample" => SAMPLE_COLUMNS,
        "slice" => SLICE_COLUMNS,
        _ => return None,
    })
}

/// Full Betti profile of one length vector.
pub fn cmd_betti(lengths: &[BigRational]) -> Result<OutputRecord, CliError> {
    let ell = LengthVector::new(lengths.to_vec())?;
    let generic = is_generic(&ell)?;
    let profile = betti_profile(&ell)?;
    let mut out = OutputRecord::new("betti", BETTI_COLUMNS);
    for (p, &b) in profile.values().iter().enumerate() {
        out.push(vec![
            Cell::int(p as u64),
            Cell::int(b),
            Cell::int(profile.short_counts()[p]),
            Cell::int(profile.median_counts()[p]),
            Cell::Bool(generic),
        ]);
    }
    Ok(out)
}

/// Exact expected `b_p` over random `n`-gons.
pub fn cmd_average(n: usize, p: usize, measure: Measure) -> Result<OutputRecord, CliError> {
    let rep = average_betti_exact(n, p, measure)?;
    let mut out = OutputRecord::new("average", AVERAGE_COLUMNS);
    out.push(vec![
        Cell::int(n as u64),
        Cell::Text(measure.name().into()),
        Cell::int(p as u64),
        Cell::rational(&rep.exact),
        Cell::decimal(&rep.exact),
        Cell::int(rep.binomial_ref),
        Cell::rational(&rep.gap),
        Cell::decimal(&rep.gap),
        Cell::int(rep.subset_term_count as u64),
    ]);
    Ok(out)
}

/// Exact averages across `n_min..=n_max`; with several measures the rows
/// alternate between them for each `n`.
pub fn cmd_convergence(
    p: usize,
    n_min: usize,
    n_max: usize,
    measures: &[Measure],
) -> Result<OutputRecord, CliError> {
    let tables = measures
        .iter()
        .map(|&m| convergence_table(p, n_min, n_max, m))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = OutputRecord::new("convergence", CONVERGENCE_COLUMNS);
    let len = tables.first().map_or(0, Vec::len);
    for i in 0..len {
        for table in &tables {
            let row = &table[i];
            let rep = &row.report;
            out.push(vec![
                Cell::int(rep.n as u64),
                Cell::Text(rep.measure.name().into()),
                Cell::int(p as u64),
                Cell::rational(&rep.exact),
                Cell::decimal(&rep.exact),
                Cell::int(rep.binomial_ref),
                Cell::decimal(&rep.gap),
                row.gap_ratio.as_ref().map_or(Cell::Null, Cell::decimal),
            ]);
        }
    }
    Ok(out)
}

/// Monte Carlo estimate of the expected `b_p`; deterministic in its arguments.
pub fn cmd_sample(
    n: usize,
    p: usize,
    measure: Measure,
    samples: u64,
    seed: u64,
) -> Result<OutputRecord, CliError> {
    let est = average_betti_mc(n, p, measure, samples, seed)?;
    let exact = |x: f64| BigRational::from_float(x).expect("finite estimate");
    let mut out = OutputRecord::new("sample", SAMPLE_COLUMNS);
    out.seed = Some(seed);
    out.push(vec![
        Cell::int(n as u64),
        Cell::Text(measure.name().into()),
        Cell::int(p as u64),
        Cell::decimal(&exact(est.mean)),
        Cell::decimal(&exact(est.std_error)),
        Cell::int(est.samples),
        Cell::int(seed),
    ]);
    Ok(out)
}

/// Fraction of a simplex on which a linear functional with the given vertex
/// values is negative.
pub fn cmd_slice(values: &[BigRational]) -> Result<OutputRecord, CliError> {
    if values.len() < 2 {
        return Err(CliError::Parse(format!(
            "slice needs at least 2 values, got {}",
            values.len()
        )));
    }
    let ratio = slice_ratio(values)?;
    let repeated = group_values(values).multiplicities().iter().any(|&m| m > 1);
    let listed: Vec<String> = values
        .iter()
        .map(|v| format!("{}/{}", v.numer(), v.denom()))
        .collect();
    let mut out = OutputRecord::new("slice", SLICE_COLUMNS);
    out.push(vec![
        Cell::Text(listed.join(";")),
        Cell::rational(&ratio),
        Cell::decimal(&ratio),
        Cell::Text(if repeated { "confluent" } else { "distinct" }.into()),
    ]);
    Ok(out)
}
