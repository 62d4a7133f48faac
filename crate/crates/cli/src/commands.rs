use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use fermat_bundle_core::classify::classify_coords;
use fermat_bundle_core::enumerate::{classify_all, count_series, CountClass, CountSeries};
use fermat_bundle_core::intersection::verify_identities;
use fermat_bundle_core::picard::{
    all_lines, galois_group, incidence, line_orbits, picard_rank, DiagonalCubic,
};
use fermat_bundle_core::{Classifier, Error, P3Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{plot, CliError, CliResult};

fn domain(e: Error) -> CliError {
    CliError::Domain(e.to_string())
}

fn write_file(path: &Path, contents: &str) -> CliResult {
    fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn dump_points(bound: u64, workers: usize) -> Result<String, CliError> {
    let classifier = Classifier::new();
    let records =
        classify_all(bound, &classifier, workers).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut out = String::new();
    for (height, r) in records {
        writeln!(
            out,
            "{}|{}|{height}|{}",
            r.point.x(),
            r.point.y(),
            r.flags()
        )
        .unwrap();
    }
    Ok(out)
}

pub fn count(bounds: &[u64], out: &Path, workers: usize, emit_points: bool) -> CliResult {
    let classifier = Classifier::new();
    let series =
        count_series(bounds, &classifier, workers).map_err(|e| CliError::Usage(e.to_string()))?;
    write_file(out, &series.to_csv())?;
    if emit_points {
        let mut path = out.as_os_str().to_owned();
        path.push(".points");
        write_file(
            Path::new(&path),
            &dump_points(*bounds.last().unwrap(), workers)?,
        )?;
    }
    print!("{}", summary_table(&series));
    Ok(())
}

fn summary_table(series: &CountSeries) -> String {
    let mut s = format!("{:>10}", "B");
    for class in CountClass::ALL {
        write!(s, " {:>14}", class.label()).unwrap();
    }
    writeln!(s, " {:>10}", "Z_FRACTION").unwrap();
    let fractions = series.z_fraction();
    for (i, b) in series.bounds.iter().enumerate() {
        write!(s, "{b:>10}").unwrap();
        for class in CountClass::ALL {
            write!(s, " {:>14}", series.get(class)[i]).unwrap();
        }
        match fractions[i] {
            Some(f) => writeln!(s, " {f:>10.6}").unwrap(),
            None => writeln!(s, " {:>10}", "-").unwrap(),
        }
    }
    s
}

pub fn enumerate(bound: u64, out: Option<&Path>, workers: usize) -> CliResult {
    if bound == 0 {
        return Err(CliError::Usage("--bound must be positive".into()));
    }
    let dump = dump_points(bound, workers)?;
    match out {
        Some(path) => write_file(path, &dump),
        None => io::stdout()
            .write_all(dump.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn parse_point(s: &str) -> Result<P3Point, CliError> {
    s.parse::<P3Point>().map_err(|e| match e {
        Error::InvalidArgument(m) => CliError::Usage(m),
        other => domain(other),
    })
}

pub fn classify(x: &str, y: &str) -> CliResult {
    let (x, y) = (parse_point(x)?, parse_point(y)?);
    let r = classify_coords(x, y).map_err(|e| match e {
        Error::NotOnVariety => CliError::Domain(format!("{x}|{y} is not on X")),
        other => domain(other),
    })?;
    println!("x={x}");
    println!("y={y}");
    let height = fermat_bundle_core::anticanonical_height(&x, &y).map_err(domain)?;
    println!("height={height}");
    for (i, v) in r.in_v.iter().enumerate() {
        println!("in_V{}={v}", i + 1);
    }
    for (i, v) in r.liftable.iter().enumerate() {
        println!("liftable{}={v}", i + 1);
    }
    println!("singular_fiber={}", r.singular_fiber);
    match r.fiber_rank {
        Some(rank) => println!("rank={rank}"),
        None => println!("rank=none"),
    }
    println!("in_Z={}", r.in_z);
    Ok(())
}

fn cubic(coefficients: &[i64]) -> Result<DiagonalCubic, CliError> {
    let a: [i64; 4] = coefficients
        .try_into()
        .map_err(|_| CliError::Usage("expected exactly four coefficients".into()))?;
    DiagonalCubic::new(a).map_err(domain)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn fiber_rank(coefficients: &[i64]) -> CliResult {
    let s = cubic(coefficients)?;
    let r = picard_rank(&s);
    println!("rank={}", r.rank_over_q);
    println!(
        "segre={}",
        if r.segre_rank_one {
            "rank-one"
        } else {
            "rank-at-least-two"
        }
    );
    println!("agreement={}", r.agreement);
    println!("group_order={}", r.group_order);
    println!("orbit_sizes={}", join(&r.orbit_sizes));
    Ok(())
}

pub fn lines(coefficients: &[i64]) -> CliResult {
    let s = cubic(coefficients)?;
    let orbits = line_orbits(&galois_group(&s));
    let lines = all_lines();
    let orbit_of = |l| orbits.iter().position(|o| o.contains(l)).unwrap();
    for l in &lines {
        let meets = lines.iter().filter(|m| incidence(l, m) == 1).count();
        println!("{l} orbit={} meets={meets}", orbit_of(l));
    }
    for (i, o) in orbits.iter().enumerate() {
        println!("orbit {i} size={}: {}", o.len(), join(o));
    }
    let r = picard_rank(&s);
    println!("rank={}", r.rank_over_q);
    Ok(())
}

pub fn verify_intersections(samples: usize, seed: u64) -> CliResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = verify_identities(&mut rng, samples).map_err(domain)?;
    let mut failed = 0;
    for c in &checks {
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        println!("{verdict} {} ({} samples)", c.name, c.samples);
        for (params, got, want) in &c.failures {
            println!("    at {params:?}: got {got}, expected {want}");
        }
        failed += usize::from(!c.passed());
    }
    if failed > 0 {
        return Err(CliError::CheckFailed(format!("{failed} identities failed")));
    }
    Ok(())
}

pub fn rank_survey(samples: usize, seed: u64, range: i64) -> CliResult {
    if range < 1 {
        return Err(CliError::Usage("--range must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut histogram = [0usize; 8];
    let mut disagreements = Vec::new();
    for _ in 0..samples {
        let a: [i64; 4] = std::array::from_fn(|_| loop {
            let v = rng.random_range(-range..=range);
            if v != 0 {
                break v;
            }
        });
        let r = picard_rank(&DiagonalCubic::new(a).map_err(domain)?);
        histogram[r.rank_over_q as usize] += 1;
        if !r.agreement {
            disagreements.push(a);
        }
    }
    println!("samples={samples} seed={seed} range={range}");
    for (rank, &n) in histogram.iter().enumerate().skip(1) {
        if n > 0 {
            println!(
                "rank {rank}: {n} ({:.2}%)",
                100.0 * n as f64 / samples as f64
            );
        }
    }
    println!("disagreements={}", disagreements.len());
    for a in &disagreements {
        println!("    {a:?}");
    }
    if disagreements.is_empty() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(
            "orbit rank and Segre's criterion disagree".into(),
        ))
    }
}

pub fn plot(csv: &Path, svg: &Path) -> CliResult {
    let text = fs::read_to_string(csv).map_err(|e| match e.kind() {
        io::ErrorKind::NotFound => CliError::MissingInput(format!("{} not found", csv.display())),
        _ => CliError::Io(format!("cannot read {}: {e}", csv.display())),
    })?;
    let series = CountSeries::from_csv(&text).map_err(|e| match e {
        Error::InvalidArgument(m) if m == "no rows" || m == "empty CSV" => {
            CliError::Domain("no rows".into())
        }
        other => domain(other),
    })?;
    write_file(svg, &plot::render_svg(&series))
}
