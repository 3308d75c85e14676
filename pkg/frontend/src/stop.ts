/** Stopping rule handed to the solver process. */
export type StopSpec =
  | { maxRuntime: number }
  | { maxIterations: number }
  | { noImprovement: number };

export function maxRuntime(seconds: number): StopSpec {
  return { maxRuntime: seconds };
}

export function maxIterations(count: number): StopSpec {
  return { maxIterations: count };
}

export function noImprovement(count: number): StopSpec {
  return { noImprovement: count };
}

export function stopArgs(stop: StopSpec): string[] {
  if ('maxRuntime' in stop) {
    return ['--max-runtime', String(stop.maxRuntime)];
  }
  if ('maxIterations' in stop) {
    return ['--max-iterations', String(stop.maxIterations)];
  }
  return ['--no-improvement', String(stop.noImprovement)];
}
