/** Typed client for the engine's HTTP API. */

export type AvatarMood = 'happy' | 'neutral' | 'sad';

export interface SessionCreated {
  session_id: string;
  opener_text: string;
  avatar_mood: AvatarMood;
}

export interface NewsPayload {
  headline: string;
  lead: string;
}

export interface UtteranceResponse {
  reply: string;
  avatar_mood: AvatarMood;
  state: string;
  news: NewsPayload | null;
}

/** The surface the UI needs; tests substitute a stub. */
export interface ServiceClient {
  createSession(): Promise<SessionCreated>;
  sendUtterance(sessionId: string, text: string): Promise<UtteranceResponse>;
}

export class HttpServiceClient implements ServiceClient {
  constructor(private readonly baseUrl: string) {}

  async createSession(): Promise<SessionCreated> {
    const res = await fetch(`${this.baseUrl}/sessions`, { method: 'POST' });
    if (!res.ok) throw new Error(`create session failed: ${res.status}`);
    return res.json() as Promise<SessionCreated>;
  }

  async sendUtterance(sessionId: string, text: string): Promise<UtteranceResponse> {
    const res = await fetch(`${this.baseUrl}/sessions/${sessionId}/utterance`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ text }),
    });
    if (res.status === 409) throw new Error('session closed');
    if (!res.ok) throw new Error(`utterance failed: ${res.status}`);
    return res.json() as Promise<UtteranceResponse>;
  }
}
