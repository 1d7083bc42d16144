import { DEFAULT_OPTIONS, runSuite } from "./runner.js";
import { SuiteOptions } from "./types.js";

function parseArgs(argv: string[]): SuiteOptions & { json: boolean } {
  const options = { ...DEFAULT_OPTIONS, json: false };
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    const next = () => {
      if (i + 1 >= argv.length) throw new Error(`missing value for ${arg}`);
      return argv[++i];
    };
    switch (arg) {
      case "--seed":
        options.seed = Number(next());
        break;
      case "--count":
        options.count = Number(next());
        break;
      case "--bound":
        options.bound = Number(next());
        break;
      case "--systems":
        options.systems = next().split(",");
        break;
      case "--primary":
        options.primaryCmd = next().split(" ");
        break;
      case "--reference":
        options.referenceCmd = next().split(" ");
        break;
      case "--json":
        options.json = true;
        break;
      default:
        throw new Error(`unknown argument ${arg}`);
    }
  }
  return options;
}

export function main(argv: string[]): number {
  let options;
  try {
    options = parseArgs(argv);
  } catch (err) {
    console.error(String(err));
    console.error(
      "usage: xcheck [--seed N] [--count N] [--bound N] [--systems D5,E6] " +
      "[--primary CMD] [--reference CMD] [--json]");
    return 2;
  }
  const lines: string[] = [];
  const outcome = runSuite(options, (line) => {
    if (!options.json) console.log(line);
    lines.push(line);
  });
  if (options.json && outcome.summary) {
    console.log(JSON.stringify(outcome.summary, null, 2));
  } else if (options.json) {
    console.log(JSON.stringify({ suite: "xcheck", status: "SKIP", log: lines }, null, 2));
  }
  return outcome.code;
}

process.exit(main(process.argv.slice(2)));
