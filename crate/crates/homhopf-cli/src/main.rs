use std::process::ExitCode;

fn main() -> ExitCode {
    homhopf_cli::commands::main_entry()
}
