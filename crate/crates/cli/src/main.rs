use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use bierlab::builders::StandardComplex;
use bierlab::cache::Cache;
use bierlab::census::{census_record, proper_complexes, CensusRecord};
use bierlab::cubical::{boundary_complex, cubical_homology, gw_partition_check, z_complex};
use bierlab::isomorphism::canonical_form;
use bierlab::json::{parse_complex, parse_multicomplex, BettiJson, ComplexJson, FacesJson};
use bierlab::murai::{classify_murai, murai_face_ideal, murai_sphere};
use bierlab::tor::{hochster_betti, is_min_non_golod_product, is_product_golod, koszul_betti_oracle, tor_products};
use bierlab::verify::{verify_with, Suite, VerifyConfig};
use bierlab::{alexander_dual, bier_sphere, classify_bier, Complex, FieldTag};

#[derive(Parser, Debug)]
#[command(name = "bierlab", version, about = "Bier spheres, Murai spheres, face rings and cubical models")]
struct Cli {
    /// Coefficient field: 0 for the rationals or a prime.
    #[arg(long, global = true, default_value = "0")]
    field: FieldTag,
    /// Directory of the result cache; caching is off when unset.
    #[arg(long, global = true, env = "BIERLAB_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file (default: stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ComplexInput {
    /// JSON complex `{"m", "facets"}`; `-` reads stdin.
    #[arg(long = "in", conflicts_with = "std")]
    input: Option<PathBuf>,
    /// A standard complex such as `cycle:6`, `points:2:4` or `q23`.
    #[arg(long)]
    std: Option<StandardComplex>,
}

impl ComplexInput {
    fn load(&self) -> Result<Complex> {
        match (&self.input, self.std) {
            (Some(path), _) => Ok(parse_complex(&read_input(path)?)?),
            (None, Some(s)) => Ok(s.build()?),
            (None, None) => bail!("either --in or --std is required"),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalize a complex and print it with basic data.
    Complex(ComplexInput),
    /// Alexander dual.
    Dual(ComplexInput),
    /// Bier sphere on `[2m]`, with `i' = m + i`.
    Bier(ComplexInput),
    /// Murai sphere of a multicomplex `{"c", "max_monomials"}`.
    Murai {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also print the flag classification.
        #[arg(long)]
        classify: bool,
    },
    /// Face ideal of the Murai sphere assembled from `M` and its dual.
    MuraiIdeal {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Bigraded Betti numbers of the face ring.
    Betti {
        #[command(flatten)]
        complex: ComplexInput,
        /// Use the Koszul complex oracle instead of Hochster's formula.
        #[arg(long)]
        oracle: bool,
    },
    /// Products in Tor and the product-level Golod predicates.
    Golod(ComplexInput),
    /// f-, h- and γ-vectors.
    Faces(ComplexInput),
    /// Classification tags of the Bier sphere.
    Classify(ComplexInput),
    /// Cells of Z(K, K∨) or its boundary, one per line.
    Cubical {
        #[command(flatten)]
        complex: ComplexInput,
        #[arg(long)]
        boundary: bool,
        /// Print reduced cellular homology ranks instead of cells.
        #[arg(long)]
        homology: bool,
        /// Run the Grujić–Welker partition check instead.
        #[arg(long)]
        gw: bool,
        #[arg(long, default_value_t = 4)]
        resolution: usize,
        #[arg(long, default_value_t = 64)]
        random_points: usize,
    },
    /// One record per isomorphism class of complexes on `[m]`, excluding the simplex.
    Census {
        #[arg(long)]
        m: usize,
    },
    /// Run verification suites (`all` for every suite).
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn complex_json(k: &Complex) -> Value {
    serde_json::to_value(ComplexJson::from(k)).expect("plain data")
}

fn render(v: &Value) -> String {
    serde_json::to_string(v).expect("json values serialize")
}

struct Session {
    field: FieldTag,
    cache: Option<Cache>,
    seed: u64,
}

impl Session {
    fn cached<T, F>(&self, namespace: &str, k: &Complex, compute: F) -> Result<T>
    where
        T: serde::Serialize + serde::de::DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        match &self.cache {
            Some(cache) => cache.get_or_compute(namespace, &canonical_form(k), self.field, compute),
            None => compute(),
        }
    }
}

fn run(cli: &Cli) -> Result<String> {
    let ctx = Session {
        field: cli.field,
        cache: cli.cache_dir.as_ref().map(Cache::new).transpose().context("opening the cache directory")?,
        seed: cli.seed,
    };
    let field = ctx.field;
    let out = match &cli.command {
        Command::Complex(input) => {
            let k = input.load()?;
            let mut v = complex_json(&k);
            v["dim"] = json!(k.dim());
            v["ghosts"] = json!(k.ghosts().to_vec());
            v["minimal_nonfaces"] = json!(k.minimal_nonfaces().iter().map(|s| s.to_vec()).collect::<Vec<_>>());
            v["flag"] = json!(k.is_flag());
            render(&v)
        }
        Command::Dual(input) => render(&complex_json(&alexander_dual(&input.load()?)?)),
        Command::Bier(input) => render(&complex_json(&bier_sphere(&input.load()?)?)),
        Command::Murai { input, classify } => {
            let mc = parse_multicomplex(&read_input(input)?)?;
            let mut v = complex_json(&murai_sphere(&mc)?);
            if *classify {
                v["classification"] = json!(classify_murai(&mc)?.to_string());
            }
            render(&v)
        }
        Command::MuraiIdeal { input } => {
            let mc = parse_multicomplex(&read_input(input)?)?;
            let ideal = murai_face_ideal(&mc)?;
            render(&json!({
                "ideal": ideal.to_string(),
                "generators": ideal.generators,
                "supports": ideal.supports().iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            }))
        }
        Command::Betti { complex, oracle } => {
            let k = complex.load()?;
            let namespace = if *oracle { "betti-koszul" } else { "betti" };
            let table: BettiJson = ctx.cached(namespace, &k, || {
                let t = if *oracle { koszul_betti_oracle(&k, field)? } else { hochster_betti(&k, field)? };
                Ok(BettiJson::new(&t, Vec::new()))
            })?;
            render(&serde_json::to_value(table)?)
        }
        Command::Golod(input) => {
            let k = input.load()?;
            let table = hochster_betti(&k, field)?;
            let mut v = serde_json::to_value(BettiJson::new(&table, tor_products(&k, field)?))?;
            v["product_golod"] = json!(is_product_golod(&k, field)?);
            v["min_non_golod"] = json!(is_min_non_golod_product(&k, field)?);
            render(&v)
        }
        Command::Faces(input) => render(&serde_json::to_value(FacesJson::of(&input.load()?))?),
        Command::Classify(input) => {
            let c = classify_bier(&input.load()?)?;
            render(&json!({
                "classification": c.to_string(),
                "tags": c.tags,
                "witness": c.flag_witness.map(|w| w.map),
            }))
        }
        Command::Cubical { complex, boundary, homology, gw, resolution, random_points } => {
            let k = complex.load()?;
            if *gw {
                render(&serde_json::to_value(gw_partition_check(&k, *resolution, *random_points, ctx.seed)?)?)
            } else {
                let mut z = z_complex(&k)?;
                if *boundary {
                    z = boundary_complex(&z)?;
                }
                if *homology {
                    let ranks: Vec<Value> =
                        cubical_homology(&z, field).into_iter().map(|(d, r)| json!([d, r])).collect();
                    render(&json!({ "field": field.characteristic(), "reduced_homology": ranks }))
                } else {
                    z.dump()
                }
            }
        }
        Command::Census { m } => {
            let mut lines = String::new();
            for k in proper_complexes(*m, true)? {
                let record: CensusRecord = ctx.cached("census", &k, || Ok(census_record(&k, field)?))?;
                lines.push_str(&serde_json::to_string(&record)?);
                lines.push('\n');
            }
            lines
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> =
                if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let config = VerifyConfig { seed: ctx.seed, ..VerifyConfig::default() };
            let mut reports = Vec::new();
            for s in suites {
                let report = verify_with(s, &config)?;
                log::info!("{report}");
                reports.push(report);
            }
            render(&serde_json::to_value(reports)?)
        }
    };
    Ok(out)
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring worker threads")?;
    }
    let mut text = run(&cli)?;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
