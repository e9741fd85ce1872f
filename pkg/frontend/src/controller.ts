/** Session controller: one in-flight request, subscribers re-render on
 * every state change. */

import type { ServiceClient } from './api.js';
import {
  UiSessionState,
  initialState,
  renderTurn,
  sessionOpened,
  submitUtterance,
  transportFailure,
} from './state.js';

export type Listener = (state: UiSessionState) => void;

export class ChatController {
  private current: UiSessionState = initialState();
  private listeners: Listener[] = [];

  constructor(private readonly client: ServiceClient) {}

  get state(): UiSessionState {
    return this.current;
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
    listener(this.current);
  }

  private update(next: UiSessionState): void {
    this.current = next;
    for (const listener of this.listeners) listener(next);
  }

  async start(): Promise<void> {
    try {
      const created = await this.client.createSession();
      this.update(sessionOpened(this.current, created));
    } catch {
      this.update(transportFailure(this.current));
    }
  }

  /** Send one utterance; ignored while the bot owns the turn. */
  async send(text: string): Promise<void> {
    const outcome = submitUtterance(this.current, text);
    if (!outcome.send) return;
    const sessionId = this.current.sessionId as string;
    this.update(outcome.state);
    try {
      const response = await this.client.sendUtterance(sessionId, text);
      this.update(renderTurn(this.current, response));
    } catch {
      this.update(transportFailure(this.current));
    }
  }
}
