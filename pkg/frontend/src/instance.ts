import { MISSING_EDGE_VALUE, TW_OPEN } from './model.js';
import type { Client, Depot, VehicleType } from './model.js';

/**
 * Serialize a model into the solver's VRPLIB dialect: explicit full-matrix
 * edge weights, plus time-window and service-time sections when any client
 * carries them.
 */
export function serializeInstance(
  name: string,
  depot: Depot,
  clients: Client[],
  vehicleType: VehicleType,
  edges: Map<string, number>,
): string {
  const dim = clients.length + 1;
  const matrix: number[][] = Array.from({ length: dim }, (_, i) =>
    Array.from({ length: dim }, (_, j) => (i === j ? 0 : MISSING_EDGE_VALUE)),
  );
  for (const [key, distance] of edges) {
    const [i, j] = key.split(',').map(Number);
    if (i !== j) {
      matrix[i][j] = distance;
    }
  }

  const hasTimeWindows = clients.some(
    (c) => c.twEarly > 0 || c.twLate < TW_OPEN || c.serviceDuration > 0,
  ) || depot.twEarly > 0 || depot.twLate < TW_OPEN;

  const lines = [
    `NAME : ${name}`,
    'TYPE : CVRP',
    `DIMENSION : ${dim}`,
    'EDGE_WEIGHT_TYPE : EXPLICIT',
    'EDGE_WEIGHT_FORMAT : FULL_MATRIX',
    `CAPACITY : ${vehicleType.capacity}`,
    `VEHICLES : ${vehicleType.numAvailable}`,
    'NODE_COORD_SECTION',
    `1 ${depot.x} ${depot.y}`,
    ...clients.map((c, i) => `${i + 2} ${c.x} ${c.y}`),
    'EDGE_WEIGHT_SECTION',
    ...matrix.map((row) => row.join(' ')),
    'DEMAND_SECTION',
    '1 0',
    ...clients.map((c, i) => `${i + 2} ${c.demand}`),
  ];
  if (hasTimeWindows) {
    lines.push('SERVICE_TIME_SECTION');
    lines.push('1 0');
    clients.forEach((c, i) => lines.push(`${i + 2} ${c.serviceDuration}`));
    lines.push('TIME_WINDOW_SECTION');
    lines.push(`1 ${depot.twEarly} ${Math.min(depot.twLate, TW_OPEN)}`);
    clients.forEach((c, i) =>
      lines.push(`${i + 2} ${c.twEarly} ${Math.min(c.twLate, TW_OPEN)}`),
    );
  }
  lines.push('DEPOT_SECTION', '1', '-1', 'EOF');
  return lines.join('\n') + '\n';
}
