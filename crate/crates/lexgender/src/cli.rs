//! Command-line interface.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use lexgender_core::classify::{classify, normalize, ClassifyError};
use lexgender_core::corpus::{classify_inventory, composition_report, gendered_sample};
use lexgender_core::eval::evaluate_results;
use lexgender_core::{
    default_lexicon, grid_search, ClassificationResult, ClassifierParams, DefinitionSource,
    GridRanges, SeedLexicon,
};

use crate::error::{exit, Error};
use crate::files::{bundled_gold, load_gold, load_tagged, read_words};
use crate::providers::{bundled_providers, open_all, DictSpec, Provider, ProviderConfig};
use crate::report::{self, OutputFormat};
use crate::snapshot::{capture, now_iso8601};

#[derive(Debug, Parser)]
#[command(
    name = "lexgender",
    version,
    about = "Detect lexical gender of English nouns from dictionary definitions"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Dictionary to consult: wordnet=DIR, snapshot=FILE, mw or dcom, optionally
    /// prefixed with ID: (repeatable; order sets listing order). Defaults to
    /// the bundled snapshots.
    #[arg(long = "dict", value_name = "SPEC", global = true)]
    pub dicts: Vec<DictSpec>,
    /// Shorthand for `--dict snapshot=FILE`, consulted after any `--dict`
    #[arg(long, value_name = "FILE", global = true)]
    pub snapshot: Option<PathBuf>,
    /// Definitions per dictionary (d)
    #[arg(short = 'd', long = "definitions", default_value_t = 4, global = true)]
    pub definitions: usize,
    /// Tokens per definition (t)
    #[arg(short = 't', long = "tokens", default_value_t = 20, global = true)]
    pub tokens: usize,
    /// Seed word pairs (w)
    #[arg(short = 'w', long = "pairs", default_value_t = 5, global = true)]
    pub pairs: usize,
    /// Cache directory for live dictionaries
    #[arg(
        long,
        env = "LEXGENDER_CACHE_DIR",
        default_value = ".lexgender-cache",
        global = true
    )]
    pub cache_root: PathBuf,
    /// Refuse live dictionaries
    #[arg(long, global = true)]
    pub offline: bool,
    /// Output format
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub format: OutputFormat,
    /// Minimum delay between requests to one host, in milliseconds
    #[arg(long, default_value_t = 1000, global = true)]
    pub min_interval_ms: u64,
    /// Words classified concurrently
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify words given as arguments or listed in a file
    Classify {
        words: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Score predictions against a gold standard
    Evaluate {
        /// Gold TSV (defaults to the bundled gold standard)
        #[arg(long)]
        gold: Option<PathBuf>,
        /// Require reproducible (non-live) dictionaries
        #[arg(long)]
        strict_repro: bool,
        /// Score not-found predictions as neutral
        #[arg(long)]
        fold_not_found: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search (d, t, w) for the best combined accuracy
    GridSearch {
        #[arg(long)]
        gold: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        d_values: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        t_values: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        w_values: Option<Vec<usize>>,
    },
    /// Composition of gendered nouns in a token<TAB>POS corpus
    CorpusReport {
        input: PathBuf,
        /// Where to write completed results if a dictionary fails mid-run
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Freeze one dictionary's answers for a word list into a snapshot file
    Snapshot {
        words: Vec<String>,
        #[arg(long)]
        words_from: Option<PathBuf>,
        #[arg(long)]
        output: PathBuf,
        /// Provider to capture (defaults to the first configured)
        #[arg(long)]
        provider: Option<String>,
    },
}

/// Resolved settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub dictionaries: Vec<ProviderConfig>,
    pub snapshot_path: Option<PathBuf>,
    pub params: ClassifierParams,
    pub cache_root: PathBuf,
    pub offline: bool,
    pub output_format: OutputFormat,
    pub jobs: usize,
}

impl CliConfig {
    pub fn from_args(args: &GlobalArgs) -> Result<Self, Error> {
        let params = ClassifierParams::new(args.definitions, args.tokens, args.pairs)?;
        if args.min_interval_ms == 0 {
            return Err(Error::Usage("--min-interval-ms must be positive".into()));
        }
        let interval = Duration::from_millis(args.min_interval_ms);
        let mut dictionaries: Vec<ProviderConfig> = args
            .dicts
            .iter()
            .cloned()
            .map(|d| d.into_config(&args.cache_root, interval))
            .collect();
        if let Some(path) = &args.snapshot {
            dictionaries.push(ProviderConfig::snapshot(path));
        }
        Ok(CliConfig {
            dictionaries,
            snapshot_path: args.snapshot.clone(),
            params,
            cache_root: args.cache_root.clone(),
            offline: args.offline,
            output_format: args.format,
            jobs: args.jobs.max(1),
        })
    }

    pub fn providers(&self) -> Result<Vec<Provider>, Error> {
        if self.dictionaries.is_empty() {
            bundled_providers()
        } else {
            open_all(&self.dictionaries, self.offline)
        }
    }
}

fn as_sources(providers: &[Provider]) -> Vec<&dyn DefinitionSource> {
    providers
        .iter()
        .map(|p| p.as_ref() as &dyn DefinitionSource)
        .collect()
}

/// Classify `words` with up to `jobs` threads, preserving input order.
pub fn classify_many(
    words: &[String],
    providers: &[Provider],
    params: &ClassifierParams,
    lexicon: &SeedLexicon,
    jobs: usize,
) -> Result<Vec<ClassificationResult>, ClassifyError> {
    let run = |chunk: &[String]| -> Result<Vec<ClassificationResult>, ClassifyError> {
        let sources = as_sources(providers);
        chunk
            .iter()
            .map(|w| classify(w, &sources, params, lexicon))
            .collect()
    };
    if jobs <= 1 || words.len() < 2 {
        return run(words);
    }
    let chunk = words.len().div_ceil(jobs);
    std::thread::scope(|s| {
        let handles: Vec<_> = words
            .chunks(chunk)
            .map(|c| s.spawn(move || run(c)))
            .collect();
        let mut out = Vec::with_capacity(words.len());
        for h in handles {
            out.extend(h.join().expect("classification thread panicked")?);
        }
        Ok(out)
    })
}

fn distinct_words<'a>(words: impl IntoIterator<Item = &'a str>) -> Vec<String> {
    let mut seen = std::collections::BTreeSet::new();
    words
        .into_iter()
        .map(normalize)
        .filter(|w| !w.is_empty() && seen.insert(w.clone()))
        .collect()
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Error> {
    let config = CliConfig::from_args(&cli.global)?;
    let lexicon = default_lexicon();
    let write = |out: &mut dyn Write, text: &str| {
        out.write_all(text.as_bytes())
            .map_err(|e| Error::io(std::path::Path::new("<stdout>"), e))
    };
    match cli.command {
        Command::Classify { words, file } => {
            let mut words = words;
            if let Some(path) = file {
                words.extend(read_words(path)?);
            }
            if words.is_empty() {
                return Err(Error::Usage("no words to classify".into()));
            }
            let providers = config.providers()?;
            let results = classify_many(&words, &providers, &config.params, &lexicon, config.jobs)?;
            write(out, &report::classification(&results, config.output_format))
        }
        Command::Evaluate {
            gold,
            strict_repro,
            fold_not_found,
            output,
        } => {
            let gold = match gold {
                Some(path) => load_gold(path)?,
                None => bundled_gold(),
            };
            let providers = config.providers()?;
            if strict_repro {
                if let Some(live) = providers.iter().find(|p| !p.is_deterministic()) {
                    return Err(Error::Usage(format!(
                        "--strict-repro forbids live provider {:?}",
                        live.id()
                    )));
                }
            }
            let words = distinct_words(gold.iter().map(|g| g.word.as_str()));
            let results = classify_many(&words, &providers, &config.params, &lexicon, config.jobs)?;
            let results: BTreeMap<String, ClassificationResult> =
                words.into_iter().zip(results).collect();
            let ids: Vec<&str> = providers.iter().map(|p| p.id()).collect();
            let report = evaluate_results(&results, &ids, &gold, fold_not_found)?;
            let text = report::evaluation(&report, config.output_format);
            match output {
                Some(path) => crate::cache::write_atomic(&path, text.as_bytes()),
                None => write(out, &text),
            }
        }
        Command::GridSearch {
            gold,
            d_values,
            t_values,
            w_values,
        } => {
            let gold = match gold {
                Some(path) => load_gold(path)?,
                None => bundled_gold(),
            };
            let standard = GridRanges::standard();
            let ranges = GridRanges {
                definitions: d_values.unwrap_or(standard.definitions),
                tokens: t_values.unwrap_or(standard.tokens),
                seed_pairs: w_values.unwrap_or(standard.seed_pairs),
            };
            let providers = config.providers()?;
            let report = grid_search(&gold, &as_sources(&providers), &lexicon, &ranges)?;
            write(out, &report::grid(&report, config.output_format))
        }
        Command::CorpusReport { input, manifest } => {
            let records = load_tagged(&input)?;
            let providers = config.providers()?;
            let results = match classify_inventory(
                &records,
                &as_sources(&providers),
                &config.params,
                &lexicon,
            ) {
                Ok(r) => r,
                Err(e) => {
                    if let Some(path) = manifest {
                        crate::cache::write_atomic(
                            &path,
                            report::to_json(&e.completed).as_bytes(),
                        )?;
                    }
                    return Err(e.into());
                }
            };
            let composition = composition_report(&results, &records)?;
            let sample = gendered_sample(&results);
            write(
                out,
                &report::corpus(&composition, &sample, config.output_format),
            )
        }
        Command::Snapshot {
            words,
            words_from,
            output,
            provider,
        } => {
            let mut words = words;
            if let Some(path) = words_from {
                words.extend(read_words(path)?);
            }
            if words.is_empty() {
                return Err(Error::Usage("no words to snapshot".into()));
            }
            let providers = config.providers()?;
            let source = match &provider {
                Some(id) => providers
                    .iter()
                    .find(|p| p.id() == id)
                    .ok_or_else(|| Error::Usage(format!("no configured provider {id:?}")))?,
                None => &providers[0],
            };
            let snapshot = capture(source.as_ref(), &words, now_iso8601())?;
            snapshot.write(&output)?;
            write(
                out,
                &format!(
                    "wrote {} entries from {} to {}\n",
                    snapshot.entries.len(),
                    snapshot.provider,
                    output.display()
                ),
            )
        }
    }
}

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::SUCCESS
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => exit::SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
