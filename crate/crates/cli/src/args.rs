// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "gala", version, about = "Layout-aware quantum operator synthesis and transpilation cost analysis")]
pub struct Cli {
    /// Human-readable output instead of the machine-readable default.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize an operator circuit.
    Build {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Rewrite a circuit into a native basis.
    Lower {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "cnot")]
        basis: gala_core::Basis,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Place and route a circuit on a device.
    Route {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        device: DeviceArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Simulate a circuit from a basis state.
    Simulate {
        #[command(flatten)]
        source: SourceArgs,
        /// Initial basis state, as an index or a `0b…` bit string.
        #[arg(long, default_value = "0", conflicts_with = "truth_table")]
        init: String,
        /// Sweep every input assignment and report the `out` bit.
        #[arg(long)]
        truth_table: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Transpilation quantum cost report.
    Tqc {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        device: DeviceArgs,
        #[arg(long, default_value = "cnot")]
        basis: gala_core::Basis,
        #[command(flatten)]
        out: OutArgs,
    },
    /// GALA versus conventional cost table.
    Compare {
        #[arg(long)]
        n: usize,
        /// Comma-separated operators; defaults to the nine table operators.
        #[arg(long, value_delimiter = ',')]
        ops: Vec<String>,
        #[arg(long, env = "GALA_MAP", default_value = "heavyhex127")]
        map: String,
        #[arg(long, default_value = "cnot")]
        basis: gala_core::Basis,
        /// Seed for the conventional random placement.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Convert a circuit between file formats.
    Export {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum)]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Q-sphere table (basis, probability, phase) of an output state.
    Qsphere {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "0", conflicts_with = "superpose_inputs")]
        init: String,
        /// Start from a uniform superposition over the labelled inputs.
        #[arg(long)]
        superpose_inputs: bool,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Qasm,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    H,
    Sx,
}

#[derive(Debug, Clone, Args)]
pub struct OpArgs {
    /// and, nand, or, nor, implication, inhibition, mcz, cv, cvdg, fredkin, miller.
    #[arg(long)]
    pub op: Option<String>,
    /// Total qubits (inputs plus out).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = VariantArg::H)]
    pub variant: VariantArg,
    /// Build the conventional multi-controlled-X circuit instead.
    #[arg(long)]
    pub conventional: bool,
    /// Operator table file overriding the built-in rows.
    #[arg(long)]
    pub spec_table: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Circuit file (text or OpenQASM), instead of `--op`.
    #[arg(long, conflicts_with_all = ["op", "spec_table", "conventional"])]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub op: OpArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DeviceArgs {
    /// Built-in map name, a map file, or a name under `$GALA_MAP_DIR`.
    #[arg(long, env = "GALA_MAP", default_value = "heavyhex127")]
    pub map: String,
    /// Physical qubit to host `out`.
    #[arg(long)]
    pub target: Option<usize>,
    /// Explicit logical-to-physical list, e.g. `3,5,15,4`.
    #[arg(long, value_delimiter = ',', conflicts_with = "target")]
    pub placement: Vec<usize>,
    /// Seed for the random placement used by conventional circuits.
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Write here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
