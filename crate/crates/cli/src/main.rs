mod args;
mod output;
mod run;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use output::{emit, render, CliError, CliResult};
use run::Context;

fn execute(cli: &Cli) -> CliResult<()> {
    if let Some(threads) = cli.global.threads {
        if threads == 0 {
            return Err(hypermix_core::Error::InvalidArgument(
                "--threads must be at least 1".into(),
            )
            .into());
        }
        // fails only if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let g = &cli.global;
    macro_rules! dispatch {
        ($name:literal, $f:path, $a:expr) => {{
            let mut ctx = Context::new(g, $a)?;
            let out = $f($a, &mut ctx)?;
            ($name, ctx, out, true)
        }};
    }
    let (name, ctx, out, clean) = match &cli.command {
        Command::Gen(a) => dispatch!("gen", run::gen, a),
        Command::Validate(a) => {
            let mut ctx = Context::new(g, a)?;
            let (out, clean) = run::validate(a, &mut ctx)?;
            ("validate", ctx, out, clean)
        }
        Command::CountExact(a) => dispatch!("count-exact", run::count_exact, a),
        Command::CountFpras(a) => dispatch!("count-fpras", run::count_fpras, a),
        Command::Sample(a) => dispatch!("sample", run::sample, a),
        Command::Couple(a) => dispatch!("couple", run::couple, a),
        Command::PercClassify(a) => dispatch!("perc-classify", run::perc_classify, a),
        Command::PercPath(a) => dispatch!("perc-path", run::perc_path, a),
        Command::PercSweep(a) => dispatch!("perc-sweep", run::perc_sweep, a),
        Command::Lsrw(a) => dispatch!("lsrw", run::lsrw, a),
        Command::Pc(a) => dispatch!("pc", run::pc, a),
        Command::MixScaling(a) => dispatch!("mix-scaling", run::mix_scaling, a),
        Command::TvExact(a) => dispatch!("tv-exact", run::tv_exact, a),
    };
    let text = render(name, ctx.config, out, g.format)?;
    emit(&text, g.out.as_deref())?;
    if clean {
        Ok(())
    } else {
        Err(run::defects_error())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::InvalidSubcommand => 64,
                _ => e.exit_code() as u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hypermix: {e}");
            ExitCode::from(CliError::exit_code(&e))
        }
    }
}
