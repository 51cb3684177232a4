/** Trailing-edge debouncer: rapid calls collapse into one invocation after
 * the quiet period (150 ms for slider-driven decodes). */

export class Debouncer<A extends unknown[]> {
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private fn: (...args: A) => void,
    private delayMs: number,
  ) {}

  call(...args: A): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      this.fn(...args);
    }, this.delayMs);
  }

  cancel(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  get pending(): boolean {
    return this.timer !== null;
  }
}
