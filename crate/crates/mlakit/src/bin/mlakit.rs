//! Thin command-line front end; all computation lives in the library.
//!
//! Exit codes: 0 = the checked property holds, 1 = it fails, 2 = input error.

use clap::{Args, Parser, Subcommand};
use mlakit::document::{
    load_algebra, load_extension, load_group, read_document, write_document, AlgebraDocument,
    LoadError, MorphismDocument, DEFAULT_ORDER_CAP,
};
use mlakit::enumeration::{classify_structures, enumerate_star_structures, DEFAULT_ENUM_CAP};
use mlakit::{algebra::MlAlgebra, cover, isoclinism};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mlakit", version, about = "Finite multiplicative Lie algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Order cap; defaults to 8 for enumeration commands and 256 elsewhere.
    /// The MLAKIT_CAP environment variable overrides the default.
    #[arg(long)]
    cap: Option<usize>,
    /// Emit the machine-readable report (the stable contract).
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file against the group and MLA axioms.
    Validate {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Print |G|, Z, LZ, 𝒵, [G,G], G⋆G, ᴹ[G,G] and the stem flag.
    Invariants {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Decide isoclinism of two algebras; prints the witnessing pair.
    Isoclinic {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate all ⋆-structures on a group.
    Enumerate {
        file: PathBuf,
        /// Write each structure as an algebra file into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate, deduplicate, and partition by isoclinism.
    Classify {
        file: PathBuf,
        /// Write the structure catalog and index into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Find the stem algebra among mutually isoclinic input files.
    Stem {
        files: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check the cover (or stem-cover) conditions on a central extension.
    CoverCheck {
        ext: PathBuf,
        /// Algebra file supplying the multiplier to compare H against.
        #[arg(long)]
        multiplier: PathBuf,
        /// Check the stem-cover condition as the exit-code property.
        #[arg(long)]
        stem: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List every axiom-valid completion of a partial ⋆ table.
    CompleteStar {
        file: PathBuf,
        /// Print at most this many completions.
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn env_cap() -> Option<usize> {
    std::env::var("MLAKIT_CAP").ok().and_then(|s| s.parse().ok())
}

fn env_workers() -> usize {
    std::env::var("MLAKIT_WORKERS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1)
}

fn cap_or(common: &Common, default: usize) -> usize {
    common.cap.or_else(env_cap).unwrap_or(default)
}

fn member_labels(alg: &MlAlgebra, s: &mlakit::Subset) -> Vec<String> {
    s.iter().map(|g| alg.label(g)).collect()
}

#[derive(Serialize)]
struct ValidateReport {
    file: String,
    valid: bool,
    violations: Vec<ViolationReport>,
}

#[derive(Serialize)]
struct ViolationReport {
    axiom: String,
    witness: Vec<usize>,
}

#[derive(Serialize)]
struct InvariantsReport {
    center: Vec<String>,
    derived_subgroup: Vec<String>,
    file: String,
    is_stem: bool,
    lie_center: Vec<String>,
    m_commutator: Vec<String>,
    ml_center: Vec<String>,
    order: usize,
    star_subgroup: Vec<String>,
}

#[derive(Serialize)]
struct IsoclinicReport {
    isoclinic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<MorphismDocument>,
    left: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<MorphismDocument>,
    right: String,
}

#[derive(Serialize)]
struct EnumerateReport {
    count: usize,
    digests: Vec<String>,
    file: String,
    group_order: usize,
}

#[derive(Serialize)]
struct ClassifyClassReport {
    is_stem: Vec<bool>,
    members: Vec<usize>,
    representative: usize,
    size: usize,
}

#[derive(Serialize)]
struct ClassifyReport {
    classes: Vec<ClassifyClassReport>,
    file: String,
    group_order: usize,
    representatives: Vec<StructureEntry>,
    total_structures: usize,
}

#[derive(Serialize)]
struct StructureEntry {
    digest: String,
    invariants: mlakit::enumeration::StructureSummary,
}

#[derive(Serialize)]
struct StemReport {
    class_size: usize,
    files: Vec<String>,
    stem: String,
    stem_order: usize,
}

#[derive(Serialize)]
struct CoverReport {
    cover: bool,
    extension: String,
    multiplier: String,
    stem_cover: bool,
    stem_requested: bool,
}

#[derive(Serialize)]
struct CompletionsReport {
    completions: Vec<AlgebraDocument>,
    count: usize,
    file: String,
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Validate { file, common } => {
            let cap = cap_or(&common, DEFAULT_ORDER_CAP);
            let doc = read_document(&file)?;
            if doc.order == 0 || doc.order > cap {
                return Err(Box::new(LoadError::CapExceeded {
                    order: doc.order,
                    cap,
                }));
            }
            let star = match (&doc.star, &doc.partial_star) {
                (Some(s), _) => s.clone(),
                (None, Some(_)) => match doc.to_algebra(cap) {
                    Ok(alg) => alg.star_rows(),
                    Err(e) => return Err(Box::new(e)),
                },
                (None, None) => return Err(Box::new(LoadError::MissingStar)),
            };
            let violations = MlAlgebra::validation_report(&doc.mul, &star);
            let report = ValidateReport {
                file: file.display().to_string(),
                valid: violations.is_empty(),
                violations: violations
                    .iter()
                    .map(|v| ViolationReport {
                        axiom: v.axiom().to_string(),
                        witness: v.witness(),
                    })
                    .collect(),
            };
            if common.json {
                println!("{}", serde_json::to_string(&report)?);
            } else if report.valid {
                println!("{}: valid multiplicative Lie algebra of order {}", report.file, doc.order);
            } else {
                println!("{}: INVALID", report.file);
                for v in &report.violations {
                    println!("  {} violated, witness {:?}", v.axiom, v.witness);
                }
            }
            Ok(exit_bool(report.valid))
        }
        Command::Invariants { file, common } => {
            let cap = cap_or(&common, DEFAULT_ORDER_CAP);
            let alg = load_algebra(&file, cap)?;
            let report = InvariantsReport {
                center: member_labels(&alg, &alg.center()),
                derived_subgroup: member_labels(&alg, &alg.derived_subgroup()),
                file: file.display().to_string(),
                is_stem: isoclinism::is_stem(&alg),
                lie_center: member_labels(&alg, &alg.lie_center()),
                m_commutator: member_labels(&alg, &alg.m_commutator()),
                ml_center: member_labels(&alg, &alg.ml_center()),
                order: alg.order(),
                star_subgroup: member_labels(&alg, &alg.star_subgroup()),
            };
            if common.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!("|G|      = {}", report.order);
                println!("Z(G)     = {{{}}}", report.center.join(", "));
                println!("LZ(G)    = {{{}}}", report.lie_center.join(", "));
                println!("mlZ(G)   = {{{}}}", report.ml_center.join(", "));
                println!("[G,G]    = {{{}}}", report.derived_subgroup.join(", "));
                println!("G*G      = {{{}}}", report.star_subgroup.join(", "));
                println!("M[G,G]   = {{{}}}", report.m_commutator.join(", "));
                println!("stem     = {}", report.is_stem);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Isoclinic { left, right, common } => {
            let cap = cap_or(&common, DEFAULT_ORDER_CAP);
            let g = load_algebra(&left, cap)?;
            let h = load_algebra(&right, cap)?;
            let pair = isoclinism::are_isoclinic(&g, &h);
            let report = match &pair {
                Some(p) => IsoclinicReport {
                    isoclinic: true,
                    lambda: Some(MorphismDocument::new(
                        p.lambda.map_usize(),
                        &p.g_quotient.alg,
                        &p.h_quotient.alg,
                    )),
                    left: left.display().to_string(),
                    mu: Some(MorphismDocument::new(
                        p.mu.map_usize(),
                        &p.g_mcomm.alg,
                        &p.h_mcomm.alg,
                    )),
                    right: right.display().to_string(),
                },
                None => IsoclinicReport {
                    isoclinic: false,
                    lambda: None,
                    left: left.display().to_string(),
                    mu: None,
                    right: right.display().to_string(),
                },
            };
            if common.json {
                println!("{}", serde_json::to_string(&report)?);
            } else if let Some(p) = &pair {
                println!("isoclinic: yes");
                println!("lambda (on central quotients) = {:?}", p.lambda.map_usize());
                println!("mu (on multiplicative commutators) = {:?}", p.mu.map_usize());
            } else {
                println!("isoclinic: no");
            }
            Ok(exit_bool(report.isoclinic))
        }
        Command::Enumerate { file, out, common } => {
            let cap = cap_or(&common, DEFAULT_ENUM_CAP);
            warn_large_cap(cap);
            let group = load_group(&file, usize::MAX)?;
            let found = enumerate_star_structures(&group, cap, env_workers())?;
            let docs: Vec<AlgebraDocument> =
                found.iter().map(AlgebraDocument::from_algebra).collect();
            let digests: Vec<String> = docs.iter().map(|d| d.digest()).collect();
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir)?;
                for (doc, digest) in docs.iter().zip(&digests) {
                    write_document(&dir.join(format!("{digest}.json")), doc)?;
                }
            }
            let report = EnumerateReport {
                count: found.len(),
                digests,
                file: file.display().to_string(),
                group_order: group.order(),
            };
            if common.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!(
                    "{} star structures on the order-{} group",
                    report.count, report.group_order
                );
                for d in &report.digests {
                    println!("  {d}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { file, out, common } => {
            let cap = cap_or(&common, DEFAULT_ENUM_CAP);
            warn_large_cap(cap);
            let group = load_group(&file, usize::MAX)?;
            let classification = classify_structures(&group, cap, env_workers())?;
            let docs: Vec<AlgebraDocument> = classification
                .representatives
                .iter()
                .map(AlgebraDocument::from_algebra)
                .collect();
            let digests: Vec<String> = docs.iter().map(|d| d.digest()).collect();
            let report = ClassifyReport {
                classes: classification
                    .classes
                    .iter()
                    .map(|members| ClassifyClassReport {
                        is_stem: members
                            .iter()
                            .map(|&i| classification.summaries[i].is_stem)
                            .collect(),
                        members: members.clone(),
                        representative: members[0],
                        size: members.len(),
                    })
                    .collect(),
                file: file.display().to_string(),
                group_order: classification.group_order,
                representatives: digests
                    .iter()
                    .zip(&classification.summaries)
                    .map(|(digest, inv)| StructureEntry {
                        digest: digest.clone(),
                        invariants: inv.clone(),
                    })
                    .collect(),
                total_structures: classification.total_structures,
            };
            if let Some(dir) = &out {
                let structures = dir.join("structures");
                std::fs::create_dir_all(&structures)?;
                for (doc, digest) in docs.iter().zip(&digests) {
                    write_document(&structures.join(format!("{digest}.json")), doc)?;
                }
                let class_of = |i: usize| {
                    classification
                        .classes
                        .iter()
                        .position(|c| c.contains(&i))
                        .unwrap()
                };
                let index: std::collections::BTreeMap<String, serde_json::Value> = digests
                    .iter()
                    .enumerate()
                    .map(|(i, d)| {
                        (
                            d.clone(),
                            serde_json::json!({
                                "class": class_of(i),
                                "file": format!("structures/{d}.json"),
                                "representative": i,
                            }),
                        )
                    })
                    .collect();
                std::fs::write(
                    dir.join("index.json"),
                    serde_json::to_string(&index)? + "\n",
                )?;
                std::fs::write(
                    dir.join("report.json"),
                    serde_json::to_string(&report)? + "\n",
                )?;
            }
            if common.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!(
                    "group order {}: {} structures, {} up to isomorphism, {} isoclinism classes",
                    report.group_order,
                    report.total_structures,
                    report.representatives.len(),
                    report.classes.len()
                );
                for (ci, class) in report.classes.iter().enumerate() {
                    println!("class {ci}: representative #{}", class.representative);
                    for &m in &class.members {
                        let e = &report.representatives[m];
                        println!(
                            "  #{m} digest {} |mlZ| {} |M[G,G]| {} stem {}",
                            &e.digest[..12],
                            e.invariants.ml_center,
                            e.invariants.m_commutator,
                            e.invariants.is_stem
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stem { files, common } => {
            let cap = cap_or(&common, DEFAULT_ORDER_CAP);
            if files.is_empty() {
                return Err("stem requires at least one algebra file".into());
            }
            let algs: Vec<MlAlgebra> = files
                .iter()
                .map(|f| load_algebra(f, cap))
                .collect::<Result<_, _>>()?;
            for i in 1..algs.len() {
                if isoclinism::are_isoclinic(&algs[0], &algs[i]).is_none() {
                    return Err(format!(
                        "NotOneClass: {} is not isoclinic to {}",
                        files[i].display(),
                        files[0].display()
                    )
                    .into());
                }
            }
            match isoclinism::find_stem_in_class(&algs) {
                Ok(idx) => {
                    let report = StemReport {
                        class_size: algs.len(),
                        files: files.iter().map(|f| f.display().to_string()).collect(),
                        stem: files[idx].display().to_string(),
                        stem_order: algs[idx].order(),
                    };
                    if common.json {
                        println!("{}", serde_json::to_string(&report)?);
                    } else {
                        println!("stem: {} (order {})", report.stem, report.stem_order);
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    if common.json {
                        println!("{}", serde_json::to_string(&serde_json::json!({"error": e.to_string()}))?);
                    } else {
                        println!("no stem: {e}");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::CoverCheck {
            ext,
            multiplier,
            stem,
            common,
        } => {
            let cap = cap_or(&common, DEFAULT_ORDER_CAP);
            let extension = load_extension(&ext, cap)?;
            let mult = load_algebra(&multiplier, cap)?;
            let cover_ok = cover::is_cover(&extension, &mult)?;
            let stem_ok = cover::is_stem_cover(&extension, &mult)?;
            let report = CoverReport {
                cover: cover_ok,
                extension: ext.display().to_string(),
                multiplier: multiplier.display().to_string(),
                stem_cover: stem_ok,
                stem_requested: stem,
            };
            if common.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!("cover: {}", report.cover);
                println!("stem cover: {}", report.stem_cover);
            }
            Ok(exit_bool(if stem { stem_ok } else { cover_ok }))
        }
        Command::CompleteStar { file, limit, common } => {
            let cap = cap_or(&common, DEFAULT_ORDER_CAP);
            let doc = read_document(&file)?;
            let mut completions = doc.completions(cap)?;
            let total = completions.len();
            completions.truncate(limit.unwrap_or(usize::MAX));
            let report = CompletionsReport {
                completions: completions
                    .iter()
                    .map(AlgebraDocument::from_algebra)
                    .collect(),
                count: total,
                file: file.display().to_string(),
            };
            if common.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!("{total} completion(s)");
                for c in &report.completions {
                    println!("{}", c.canonical_json());
                }
            }
            Ok(exit_bool(total > 0))
        }
    }
}

fn warn_large_cap(cap: usize) {
    if cap > DEFAULT_ENUM_CAP {
        eprintln!(
            "warning: enumeration cap {cap} above {DEFAULT_ENUM_CAP}; runtime grows steeply with order"
        );
    }
}

fn exit_bool(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
