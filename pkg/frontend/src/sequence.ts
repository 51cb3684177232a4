/** Monotonic sequence gate: each request takes a ticket, and a response is
 * applied only if no newer ticket has been issued since — stale responses
 * from superseded requests are discarded. One gate per workflow. */

export class SequenceGate {
  private counter = 0;

  issue(): number {
    this.counter += 1;
    return this.counter;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.counter;
  }
}
