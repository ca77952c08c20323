use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use silt_core::classifier::{classify_catalog, enumerate_indecomposables};
use silt_core::derived::{certify, left_mutation, perp_completion, right_mutation, silting_reduce, DerivedObject};
use silt_core::families::{generate_ank, random_monomial_linear};
use silt_core::harness::{
    closure_fuzz, reduction_consistency, silting_properties, verify_paper, Config, CorpusSpec, VerificationReport,
};
use silt_core::io::{load_summands, parse_algebra, parse_dobj, write_algebra, write_dobj};
use silt_core::presenter::{gabriel_presentation, module_endomorphism_algebra};
use silt_core::taured::{summand_indices, tau_tilting_reduction};
use silt_core::{Algebra, AssociativeAlgebra, PrimeField};

#[derive(Parser)]
#[command(name = "silt", version, about = "Bound quiver algebras, their modules and silting objects")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// characteristic of the ground field
    #[arg(long, global = true, default_value_t = PrimeField::DEFAULT_CHAR)]
    field_char: u32,
    /// longest path considered when building an algebra
    #[arg(long, global = true, default_value_t = silt_core::algebra::DEFAULT_MAX_PATH_LEN)]
    max_path_len: usize,
    /// mesh budget of the knitting algorithm
    #[arg(long, global = true, default_value_t = silt_core::classifier::DEFAULT_KNITTING_CAP)]
    knitting_cap: usize,
    /// widest shift window searched when completing silting objects
    #[arg(long, global = true, default_value_t = silt_core::derived::DEFAULT_SHIFT_WINDOW)]
    shift_window: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an algebra file and report its basic invariants
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Classify an algebra (hereditary, shod, strictly shod, weakly shod)
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List the indecomposable modules with pd, id and τ
    Indec { file: PathBuf },
    /// Presentation of A/<e> for the given vertices
    Quotient {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        cut: Vec<usize>,
    },
    /// Presentation of eAe for the given vertices
    Corner {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
    },
    /// Silting objects in the derived category of a hereditary algebra
    Silting {
        #[command(subcommand)]
        cmd: SiltingCmd,
    },
    /// τ-tilting reduction at a τ-rigid module
    Taured {
        file: PathBuf,
        /// builtin name (P(i), I(i), S(i), interval(i,j)) or module file; repeatable
        #[arg(long, required = true)]
        module: Vec<String>,
    },
    /// Gabriel presentation of End of a sum of modules
    Endo {
        file: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        summands: Vec<String>,
    },
    /// Generate an algebra from a family
    Gen {
        #[command(subcommand)]
        cmd: GenCmd,
    },
    /// Run the regression suites
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    Check { file: PathBuf },
    Show { file: PathBuf },
}

#[derive(Subcommand)]
enum SiltingCmd {
    /// Certify a derived object as presilting / silting
    Check { file: PathBuf, dobj: PathBuf },
    /// Mutate at one summand (1-based)
    Mutate {
        file: PathBuf,
        dobj: PathBuf,
        #[arg(long)]
        at: usize,
        #[arg(long)]
        right: bool,
    },
    /// Complete a presilting object N to N ⊕ D with Hom(D, N[ℤ]) = 0
    Complete { file: PathBuf, dobj: PathBuf },
    /// Silting reduction at the summands D (1-based) of a silting object
    Reduce {
        file: PathBuf,
        dobj: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    Ank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Linear A_n with each length-two path killed with probability 1/3
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Paper {
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
    Closure {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 50)]
        random: usize,
        #[arg(long)]
        json: bool,
    },
    Silting {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 20)]
        walks: usize,
        #[arg(long, default_value_t = 3)]
        window: i32,
        #[arg(long)]
        json: bool,
    },
    Reduction {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        window: i32,
        #[arg(long)]
        json: bool,
    },
}

impl Global {
    fn config(&self) -> Result<Config> {
        Ok(Config {
            field: PrimeField::new(self.field_char)?,
            max_path_len: self.max_path_len,
            knitting_cap: self.knitting_cap,
            shift_window: self.shift_window,
        })
    }

    fn load(&self, file: &Path) -> Result<Algebra> {
        let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
        let cfg = self.config()?;
        parse_algebra(&text, cfg.field, cfg.max_path_len).with_context(|| file.display().to_string())
    }

    fn load_dobj(&self, alg: &Algebra, file: &Path) -> Result<DerivedObject> {
        let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
        parse_dobj(&text, alg, base_dir(file)).with_context(|| file.display().to_string())
    }
}

fn base_dir(file: &Path) -> &Path {
    file.parent().unwrap_or(Path::new("."))
}

fn vertices(alg_n: usize, one_based: &[usize]) -> Result<Vec<usize>> {
    one_based
        .iter()
        .map(|&v| if v == 0 || v > alg_n { bail!("vertex {v} outside 1..={alg_n}") } else { Ok(v - 1) })
        .collect()
}

fn present(b: &AssociativeAlgebra) -> Result<String> {
    if b.dim() == 0 {
        return Ok("# zero algebra\n".into());
    }
    Ok(write_algebra(&gabriel_presentation(b)?.algebra))
}

fn cartan_text(c: &[Vec<usize>]) -> String {
    c.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("\n")
}

fn report(r: &VerificationReport, json: bool) -> Result<bool> {
    if json {
        println!("{}", serde_json::to_string_pretty(r)?);
    } else {
        print!("{}", r.render_text());
    }
    Ok(r.passed())
}

fn run(cli: Cli) -> Result<bool> {
    let g = &cli.global;
    match cli.cmd {
        Cmd::Algebra { cmd: AlgebraCmd::Check { file } } => {
            let alg = g.load(&file)?;
            println!("ok: {} vertices, {} arrows, dim {}", alg.vertex_count(), alg.quiver().arrows().len(), alg.dim());
            println!("cartan:\n{}", cartan_text(&alg.cartan()));
        }
        Cmd::Algebra { cmd: AlgebraCmd::Show { file } } => {
            let alg = g.load(&file)?;
            print!("{}", write_algebra(&alg));
            println!("# basis: {}", (0..alg.dim()).map(|b| alg.basis_label(b)).collect::<Vec<_>>().join(", "));
        }
        Cmd::Classify { file, json } => {
            let alg = g.load(&file)?;
            let r = classify_catalog(&enumerate_indecomposables(&alg, g.knitting_cap)?);
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!("gl.dim {}", r.gl_dim);
                println!("hereditary {}\nshod {}\nstrictly shod {}\nweakly shod {}", r.hereditary, r.shod, r.strictly_shod, r.weakly_shod);
                for w in &r.witness {
                    println!("not {}: {} {}", w.verdict, w.module.as_deref().unwrap_or("-"), w.detail);
                }
            }
        }
        Cmd::Indec { file } => {
            let alg = g.load(&file)?;
            let c = enumerate_indecomposables(&alg, g.knitting_cap)?;
            for i in 0..c.len() {
                let tau = c.tau_of(i).map_or("0".to_string(), |j| c.label(j));
                println!("{:>3}  {:<16} pd {:<4} id {:<4} τ {}", i + 1, c.label(i), c.pd[i].to_string(), c.id[i].to_string(), tau);
            }
        }
        Cmd::Quotient { file, cut } => {
            let alg = g.load(&file)?;
            let cut = vertices(alg.vertex_count(), &cut)?;
            print!("{}", write_algebra(&alg.idempotent_quotient(&cut)?));
        }
        Cmd::Corner { file, keep } => {
            let alg = g.load(&file)?;
            let keep = vertices(alg.vertex_count(), &keep)?;
            print!("{}", present(&alg.corner_algebra(&keep))?);
        }
        Cmd::Silting { cmd } => return silting(g, cmd),
        Cmd::Taured { file, module } => {
            let alg = g.load(&file)?;
            let c = enumerate_indecomposables(&alg, g.knitting_cap)?;
            let mut z = Vec::new();
            for m in load_summands(&module, &alg, Path::new("."))? {
                z.extend(summand_indices(&c, &m)?);
            }
            let r = tau_tilting_reduction(&c, &z)?;
            let u: Vec<String> = r.completion.iter().map(|&i| c.label(i)).collect();
            println!("# Bongartz completion: {}", u.join(" + "));
            print!("{}", present(&r.c)?);
        }
        Cmd::Endo { file, summands } => {
            let alg = g.load(&file)?;
            let t = load_summands(&summands, &alg, Path::new("."))?;
            print!("{}", present(&module_endomorphism_algebra(&t)?)?);
        }
        Cmd::Gen { cmd: GenCmd::Ank { n, k } } => {
            print!("{}", write_algebra(&generate_ank(g.config()?.field, n, k)?));
        }
        Cmd::Gen { cmd: GenCmd::Random { n, seed } } => {
            print!("{}", write_algebra(&random_monomial_linear(g.config()?.field, n, seed)?));
        }
        Cmd::Verify { cmd } => {
            let cfg = g.config()?;
            return match cmd {
                VerifyCmd::Paper { only, json } => report(&verify_paper(&cfg, only.as_deref())?, json),
                VerifyCmd::Closure { seed, max_n, random, json } => {
                    let spec = CorpusSpec { max_n, random_count: random, random_n: 6, seed };
                    report(&closure_fuzz(&cfg, &spec)?, json)
                }
                VerifyCmd::Silting { seed, max_n, walks, window, json } => {
                    report(&silting_properties(&cfg, max_n, walks, seed, window)?, json)
                }
                VerifyCmd::Reduction { seed, count, window, json } => {
                    report(&reduction_consistency(&cfg, count, seed, window)?, json)
                }
            };
        }
    }
    Ok(true)
}

fn silting(g: &Global, cmd: SiltingCmd) -> Result<bool> {
    match cmd {
        SiltingCmd::Check { file, dobj } => {
            let alg = g.load(&file)?;
            let t = g.load_dobj(&alg, &dobj)?;
            let cert = certify(&t);
            println!("{}", serde_json::to_string_pretty(&cert)?);
            Ok(cert.silting)
        }
        SiltingCmd::Mutate { file, dobj, at, right } => {
            let alg = g.load(&file)?;
            let t = g.load_dobj(&alg, &dobj)?;
            let i = vertices(t.len(), &[at])?[0];
            let mu = if right { right_mutation(&t, i)? } else { left_mutation(&t, i)? };
            print!("{}", write_dobj(&mu.result)?);
            Ok(true)
        }
        SiltingCmd::Complete { file, dobj } => {
            let alg = g.load(&file)?;
            let n = g.load_dobj(&alg, &dobj)?;
            let c = enumerate_indecomposables(&alg, g.knitting_cap)?;
            let out = perp_completion(&n, &c, g.shift_window)?;
            print!("{}", write_dobj(&n.sum(&out.complement))?);
            println!("# complement: {}", out.complement.label());
            Ok(true)
        }
        SiltingCmd::Reduce { file, dobj, d } => {
            let alg = g.load(&file)?;
            let t = g.load_dobj(&alg, &dobj)?;
            let d = vertices(t.len(), &d)?;
            let r = silting_reduce(&t, &d)?;
            println!("# S_N = {}", r.s_n.label());
            print!("{}", present(&r.endo_sn)?);
            let ok = r.consistent()?;
            println!("# End(T)/<e_D> {} End(S_N)", if ok { "≅" } else { "≇" });
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
