import assert from 'node:assert/strict';
import { execFileSync } from 'node:child_process';
import { mkdtempSync, rmSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { test } from 'node:test';

import { Model } from '../src/model.js';
import type { Client, Depot } from '../src/model.js';
import { maxIterations } from '../src/stop.js';
import { solverCommand } from '../src/runner.js';

function fourClientModel(): Model {
  const model = new Model();
  const coords: Array<[number, number]> = [
    [50, 50],
    [10, 10],
    [90, 10],
    [90, 90],
    [10, 90],
  ];
  const depot = model.addDepot(coords[0][0], coords[0][1]);
  const locations: Array<Depot | Client> = [depot];
  for (const [x, y] of coords.slice(1)) {
    locations.push(model.addClient({ x, y, demand: 4 }));
  }
  model.addVehicleType(2, 10);
  for (const a of locations) {
    for (const b of locations) {
      if (a !== b) {
        const distance = Math.round(Math.hypot(a.x - b.x, a.y - b.y));
        model.addEdge(a, b, distance);
      }
    }
  }
  return model;
}

test('script and CLI agree on an equivalent instance file', async () => {
  const model = fourClientModel();
  const viaScript = await model.solve({ stop: maxIterations(200), seed: 1 });

  const dir = mkdtempSync(join(tmpdir(), 'hgsvrp-eq-'));
  try {
    const path = join(dir, 'same.vrp');
    writeFileSync(path, model.toInstanceText('same'));
    const [cmd, ...base] = solverCommand();
    const raw = execFileSync(
      cmd,
      [...base, 'solve', path, '--json', '--seed', '1', '--max-iterations', '200'],
      { encoding: 'utf8' },
    );
    const viaCli = JSON.parse(raw);
    assert.equal(viaScript.cost, viaCli.cost);
    assert.equal(viaScript.feasible, viaCli.feasible);
    assert.deepEqual(viaScript.routes, viaCli.routes);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
});

test('same seed gives equal costs across calls', async () => {
  const first = await fourClientModel().solve({ stop: maxIterations(60), seed: 7 });
  const second = await fourClientModel().solve({ stop: maxIterations(60), seed: 7 });
  assert.equal(first.cost, second.cost);
  assert.deepEqual(first.routes, second.routes);
  assert.ok(first.feasible);
});

test('different seeds may differ but stay complete', async () => {
  const result = await fourClientModel().solve({ stop: maxIterations(30), seed: 3 });
  const visited = result.routes.flat().sort((a, b) => a - b);
  assert.deepEqual(visited, [1, 2, 3, 4]);
});

test('validation errors surface with the core message', async () => {
  const model = new Model();
  model.addDepot(0, 0);
  model.addClient({ x: 1, y: 0, demand: 1 });
  await assert.rejects(
    model.solve({ stop: maxIterations(5), seed: 0 }),
    /fleet undefined/,
  );
});
