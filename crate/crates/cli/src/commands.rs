use std::collections::BTreeSet;
use std::path::Path;

use clap::{Args, ValueEnum};
use hyperarr::arrangement::{make_family, parse_arrangement, Arrangement, FamilySpec};
use hyperarr::combinatorics::{
    catalan_number, catalan_region_to_ballot, chromatic_polynomial, count_acyclic_orientations,
    enumerate_parking_functions, has_positive_partial_sums, in_base_chamber, is_ballot, linial_chi_formula,
    pak_labeling, Graph, MAX_PAK_N,
};
use hyperarr::exact_math::{int, poly_roots_numeric, Polynomial};
use hyperarr::orlik_solomon::{hilbert_from_chi, OrlikSolomon};
use hyperarr::poset::{chi_via_deletion_contraction, chi_via_finite_field, chi_via_mobius};
use hyperarr::regions::{counts_of, enumerate_regions_with, format_signs, zaslavsky_counts, Region, RegionBudget};
use hyperarr::selftest;
use hyperarr::{Error, Result};

use crate::report::{
    coefficients, rationals, BallotEntry, BallotReport, ChiReport, Counts, GraphReport, LabelEntry, MethodEntry,
    OsReport, ParkingReport, RegionEntry, Report, RootsReport, Summary,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Braid,
    Catalan,
    Shi,
    Linial,
    Generic,
    Graphical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Mobius,
    Delcon,
    Finitefield,
    All,
}

/// Where the arrangement comes from: a family or a file.
#[derive(Clone, Debug, Args)]
pub struct Source {
    #[arg(long, value_enum, conflicts_with = "file")]
    pub family: Option<FamilyName>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Dimension of a generic arrangement.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Graph file for `--family graphical`.
    #[arg(long)]
    pub graph: Option<String>,
    /// Arrangement file.
    #[arg(long)]
    pub file: Option<String>,
}

/// Limits passed down to the library.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    pub max_points: u64,
    pub regions: RegionBudget,
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(Path::new(path)).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))
}

pub fn load_graph(path: &str) -> Result<Graph> {
    Graph::parse(&read(path)?)
}

fn required_n(source: &Source) -> Result<usize> {
    source
        .n
        .ok_or_else(|| Error::InvalidSpec("--n is required for this family".into()))
}

pub fn load(source: &Source) -> Result<(String, Arrangement)> {
    if let Some(path) = &source.file {
        return Ok((path.clone(), parse_arrangement(&read(path)?)?));
    }
    let spec = match source.family {
        None => return Err(Error::InvalidSpec("give --family or --file".into())),
        Some(FamilyName::Braid) => FamilySpec::Braid(required_n(source)?),
        Some(FamilyName::Catalan) => FamilySpec::Catalan(required_n(source)?),
        Some(FamilyName::Shi) => FamilySpec::Shi(required_n(source)?),
        Some(FamilyName::Linial) => FamilySpec::Linial(required_n(source)?),
        Some(FamilyName::Generic) => FamilySpec::Generic {
            n: required_n(source)?,
            d: source.d,
        },
        Some(FamilyName::Graphical) => {
            let path = source
                .graph
                .as_ref()
                .ok_or_else(|| Error::InvalidSpec("--family graphical needs --graph <file>".into()))?;
            FamilySpec::Graphical(load_graph(path)?)
        }
    };
    Ok((spec.name(), make_family(&spec)?))
}

fn summary(name: String, a: &Arrangement) -> Summary {
    Summary {
        name,
        dim: a.dim(),
        hyperplanes: a.len(),
        rank: a.rank(),
    }
}

pub fn chi(source: &Source, method: Method, budgets: Budgets) -> Result<Report> {
    let (name, a) = load(source)?;
    let mut report = Report::new("chi");
    report.arrangement = Some(summary(name, &a));
    let mut results: Vec<(&str, Polynomial, Option<Vec<u64>>)> = Vec::new();
    if matches!(method, Method::Mobius | Method::All) {
        results.push(("mobius", chi_via_mobius(&a), None));
    }
    if matches!(method, Method::Delcon | Method::All) {
        results.push(("deletion-contraction", chi_via_deletion_contraction(&a), None));
    }
    if matches!(method, Method::Finitefield | Method::All) {
        let ff = chi_via_finite_field(&a, budgets.max_points)?;
        results.push(("finite-field", ff.polynomial, Some(ff.primes)));
    }
    let first = results[0].1.clone();
    let methods: Vec<MethodEntry> = results
        .into_iter()
        .map(|(m, p, primes)| MethodEntry {
            method: m.to_string(),
            coefficients: coefficients(&p),
            agrees: p == first,
            primes,
        })
        .collect();
    if methods.len() > 1 {
        report.check(
            "characteristic polynomial methods agree",
            methods.iter().all(|m| m.agrees),
        );
    }
    report.chi = Some(ChiReport {
        polynomial: first.to_string(),
        coefficients: coefficients(&first),
        methods,
    });
    Ok(report)
}

fn region_entry(r: &Region) -> RegionEntry {
    RegionEntry {
        signs: format_signs(&r.signs),
        sample: rationals(&r.sample),
        bounded: r.relatively_bounded,
    }
}

pub fn regions(source: &Source, enumerate: bool, bounded_only: bool, budgets: Budgets) -> Result<Report> {
    let (name, a) = load(source)?;
    let mut report = Report::new("regions");
    report.arrangement = Some(summary(name, &a));
    let z = zaslavsky_counts(&a);
    report.counts = Some(Counts {
        regions: z.regions,
        bounded: z.bounded,
    });
    if enumerate || bounded_only {
        let found = enumerate_regions_with(&a, budgets.regions)?;
        report.check("enumeration matches Zaslavsky counts", counts_of(&found) == z);
        report.regions = Some(
            found
                .iter()
                .filter(|r| !bounded_only || r.relatively_bounded)
                .map(region_entry)
                .collect(),
        );
    }
    Ok(report)
}

pub fn parking(n: usize, labels: bool) -> Result<Report> {
    let all = enumerate_parking_functions(n)?;
    let mut report = Report::new("parking");
    let expected = (n as u64 + 1).pow(n.saturating_sub(1) as u32);
    report.check("count is (n+1)^(n-1)", all.len() as u64 == expected);
    let mut parking = ParkingReport {
        n,
        count: all.len() as u64,
        labels: None,
    };
    if labels {
        if n > MAX_PAK_N {
            return Err(Error::BudgetExceeded(format!("--labels supports n <= {MAX_PAK_N}")));
        }
        let pak = pak_labeling(n)?;
        let distinct: BTreeSet<&Vec<usize>> = pak.labels.iter().collect();
        let expected: BTreeSet<&Vec<usize>> = all.iter().collect();
        report.check("Pak labels are the parking functions, once each", {
            distinct.len() == pak.labels.len() && distinct == expected
        });
        parking.labels = Some(
            pak.regions
                .iter()
                .zip(&pak.labels)
                .map(|(r, l)| LabelEntry {
                    signs: format_signs(&r.signs),
                    label: l.clone(),
                })
                .collect(),
        );
    }
    report.parking = Some(parking);
    Ok(report)
}

pub fn ballot(n: usize, budgets: Budgets) -> Result<Report> {
    let a = make_family(&FamilySpec::Catalan(n))?;
    let regions = enumerate_regions_with(&a, budgets.regions)?;
    let mut report = Report::new("ballot");
    report.arrangement = Some(summary(FamilySpec::Catalan(n).name(), &a));
    let counts = counts_of(&regions);
    report.counts = Some(Counts {
        regions: counts.regions,
        bounded: counts.bounded,
    });
    let mut sequences = Vec::new();
    for r in regions.iter().filter(|r| in_base_chamber(n, r)) {
        sequences.push(BallotEntry {
            signs: format_signs(&r.signs),
            ballot: catalan_region_to_ballot(n, r)?,
            bounded: r.relatively_bounded,
        });
    }
    let distinct: BTreeSet<&Vec<i8>> = sequences.iter().map(|s| &s.ballot).collect();
    report.check(
        "one ballot sequence per chamber region",
        distinct.len() == sequences.len(),
    );
    report.check(
        "chamber holds C_n regions",
        sequences.len() as u64 == catalan_number(n as u64),
    );
    report.check(
        "every sequence is a ballot sequence",
        sequences.iter().all(|s| is_ballot(&s.ballot)),
    );
    report.check(
        "bounded iff all proper partial sums are positive",
        sequences
            .iter()
            .all(|s| s.bounded == has_positive_partial_sums(&s.ballot)),
    );
    report.ballots = Some(BallotReport { n, sequences });
    Ok(report)
}

pub fn orlik_solomon(source: &Source) -> Result<Report> {
    let (name, a) = load(source)?;
    let os = OrlikSolomon::compute(&a)?;
    let mut report = Report::new("os");
    report.arrangement = Some(summary(name, &a));
    let hilbert = os.hilbert_polynomial();
    report.check(
        "Hilbert series is (-x)^d chi(-1/x)",
        hilbert == hilbert_from_chi(&chi_via_mobius(&a), a.dim()),
    );
    report.orlik_solomon = Some(OsReport {
        graded_dimensions: os.graded_dimensions().to_vec(),
        hilbert: hilbert.to_string().replace('t', "x"),
    });
    Ok(report)
}

/// Largest `n` for which the formula is also checked against the poset.
const LINIAL_POSET_CHECK: usize = 5;

pub fn linial_roots(n: usize, tolerance: f64) -> Result<Report> {
    if n == 0 {
        return Err(Error::InvalidSpec("--n must be positive".into()));
    }
    let chi = linial_chi_formula(n);
    let mut report = Report::new("linial-roots");
    if n <= LINIAL_POSET_CHECK {
        let a = make_family(&FamilySpec::Linial(n))?;
        report.check("formula matches the intersection poset", chi == chi_via_mobius(&a));
    }
    let reduced = chi.div_by_t().expect("chi(0) = 0");
    let mut roots = if n > 1 {
        poly_roots_numeric(&reduced)?
    } else {
        Vec::new()
    };
    roots.sort_by(|a, b| a.im.total_cmp(&b.im));
    let half = n as f64 / 2.0;
    let max_deviation = roots.iter().map(|z| (z.re - half).abs()).fold(0.0, f64::max);
    report.check(
        format!("every root has real part n/2 within {tolerance:e}"),
        max_deviation < tolerance,
    );
    report.chi = Some(ChiReport {
        polynomial: chi.to_string(),
        coefficients: coefficients(&chi),
        methods: Vec::new(),
    });
    report.linial_roots = Some(RootsReport {
        n,
        tolerance,
        real_parts: roots.iter().map(|z| z.re).collect(),
        imaginary_parts: roots.iter().map(|z| z.im).collect(),
        max_deviation,
    });
    Ok(report)
}

pub fn graph(path: &str, chromatic: bool, acyclic: bool, budgets: Budgets) -> Result<Report> {
    let g = load_graph(path)?;
    let (chromatic, acyclic) = if chromatic || acyclic {
        (chromatic, acyclic)
    } else {
        (true, true)
    };
    let mut report = Report::new("graph");
    let mut out = GraphReport {
        vertices: g.n(),
        edges: g.edges().to_vec(),
        chromatic: None,
        acyclic_orientations: None,
        regions: None,
    };
    let chi = if chromatic {
        Some(chromatic_polynomial(&g)?)
    } else {
        None
    };
    if let Some(chi) = &chi {
        out.chromatic = Some(chi.to_string());
        report.chi = Some(ChiReport {
            polynomial: chi.to_string(),
            coefficients: coefficients(chi),
            methods: Vec::new(),
        });
    }
    if acyclic {
        let count = count_acyclic_orientations(&g)?;
        let a = make_family(&FamilySpec::Graphical(g.clone()))?;
        let regions = enumerate_regions_with(&a, budgets.regions)?.len() as u64;
        report.check("acyclic orientations equal regions", count == regions);
        if let Some(chi) = &chi {
            let mut stanley = chi.eval_i64(-1);
            if g.n() % 2 == 1 {
                stanley = -stanley;
            }
            report.check(
                "acyclic orientations equal (-1)^n chi(-1)",
                stanley == int(count as i64),
            );
        }
        out.acyclic_orientations = Some(count);
        out.regions = Some(regions);
    }
    report.graph = Some(out);
    Ok(report)
}

pub fn run_selftest(criterion: Option<usize>) -> Result<Report> {
    let outcomes = match criterion {
        Some(id) if (1..=selftest::TITLES.len()).contains(&id) => vec![selftest::run(id)],
        Some(id) => return Err(Error::InvalidSpec(format!("no criterion {id}"))),
        None => selftest::run_all(),
    };
    let mut report = Report::new("selftest");
    report.selftest = Some(outcomes);
    Ok(report)
}
