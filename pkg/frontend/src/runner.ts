import { execFile } from 'node:child_process';
import { mkdtemp, rm, writeFile } from 'node:fs/promises';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { promisify } from 'node:util';

import type { SolveResult } from './result.js';
import { stopArgs } from './stop.js';
import type { StopSpec } from './stop.js';

const execFileAsync = promisify(execFile);

/** Solver executable; override with the HGSVRP_BIN environment variable. */
export function solverCommand(): string[] {
  const bin = process.env.HGSVRP_BIN;
  if (bin) {
    return bin.split(' ');
  }
  return ['hgsvrp'];
}

export interface RunOptions {
  stop: StopSpec;
  seed?: number;
  profile?: 'cvrp' | 'vrptw';
}

/** Write the instance to a scratch file and solve it via the CLI. */
export async function solveInstanceFile(
  instanceText: string,
  options: RunOptions,
): Promise<SolveResult> {
  const dir = await mkdtemp(join(tmpdir(), 'hgsvrp-'));
  const path = join(dir, 'instance.vrp');
  try {
    await writeFile(path, instanceText);
    return await solvePath(path, options);
  } finally {
    await rm(dir, { recursive: true, force: true });
  }
}

/** Solve an instance file already on disk. */
export async function solvePath(path: string, options: RunOptions): Promise<SolveResult> {
  const [cmd, ...baseArgs] = solverCommand();
  const args = [
    ...baseArgs,
    'solve',
    path,
    '--json',
    '--seed',
    String(options.seed ?? 0),
    ...stopArgs(options.stop),
  ];
  if (options.profile) {
    args.push('--profile', options.profile);
  }
  let stdout: string;
  try {
    ({ stdout } = await execFileAsync(cmd, args, { maxBuffer: 64 * 1024 * 1024 }));
  } catch (error) {
    const failure = error as { code?: number; stdout?: string; stderr?: string };
    // exit code 1 still carries a JSON result (best found was infeasible)
    if (failure.code === 1 && failure.stdout?.trimStart().startsWith('{')) {
      stdout = failure.stdout;
    } else {
      const detail = (failure.stderr ?? '').trim().split('\n').pop() ?? '';
      throw new Error(detail.replace(/^Error:\s*/, '') || 'solver invocation failed');
    }
  }
  const payload = JSON.parse(stdout) as {
    cost: number;
    feasible: boolean;
    iterations: number;
    runtime_s: number;
    num_routes: number;
    routes: number[][];
    seed: number;
  };
  return {
    cost: payload.cost,
    feasible: payload.feasible,
    iterations: payload.iterations,
    runtimeSeconds: payload.runtime_s,
    numRoutes: payload.num_routes,
    routes: payload.routes,
    seed: payload.seed,
  };
}
