/** Typed client for the graph exploration HTTP API. */

export interface ConceptFacet {
  classIri: string
  label: string
  count: number
}

export interface IndividualFacet {
  id: string
  label: string
  classIri: string | null
}

export interface FacetsResponse {
  concepts: ConceptFacet[]
  individuals: IndividualFacet[]
  lang: string
}

export interface TooltipRow {
  property: string
  value: string
}

export interface SourceSpan {
  doc: string
  begin: number
  end: number
}

export interface ViewNode {
  id: string
  label: string
  classIri: string | null
  classLabel: string | null
  iconKey: string | null
  tooltip: TooltipRow[]
  spans: SourceSpan[]
}

export interface ViewEdge {
  source: string
  target: string
  property: string
  label: string
}

export interface ViewResponse {
  nodes: ViewNode[]
  edges: ViewEdge[]
  lang: string
  depth: number
  seeds: string[]
}

export interface TableRow {
  subject: string
  predicate: string
  object: string
}

export interface TableResponse {
  rows: TableRow[]
}

export type Mode = 'concept' | 'individual'

export interface ViewParams {
  mode: Mode
  seeds: string[]
  depth: number
  lang: string
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message)
    this.name = 'ApiError'
  }
}

async function raiseForStatus(resp: Response): Promise<Response> {
  if (resp.ok) return resp
  let code = `http_${resp.status}`
  let message = resp.statusText || `request failed with status ${resp.status}`
  try {
    const body = await resp.json()
    if (body && typeof body.code === 'string') {
      code = body.code
      if (typeof body.message === 'string') message = body.message
    }
  } catch {
    // non-JSON error body, keep the status-derived message
  }
  throw new ApiError(code, message, resp.status)
}

function viewQuery(p: ViewParams, format: string): Record<string, string> {
  return {
    mode: p.mode,
    seeds: [...p.seeds].sort().join(','),
    depth: String(p.depth),
    lang: p.lang,
    format,
  }
}

export class ApiClient {
  constructor(private baseUrl = '') {}

  private async get(path: string, params?: Record<string, string>): Promise<Response> {
    const qs = params ? `?${new URLSearchParams(params)}` : ''
    return raiseForStatus(await fetch(`${this.baseUrl}${path}${qs}`))
  }

  private async json<T>(path: string, params?: Record<string, string>): Promise<T> {
    return (await this.get(path, params)).json()
  }

  async createSession(
    rdf: Blob,
    format: string,
    documents: File[] = [],
  ): Promise<{ id: string; triples: number }> {
    const form = new FormData()
    form.append('rdf', rdf)
    form.append('format', format)
    for (const doc of documents) form.append('documents', doc)
    const resp = await fetch(`${this.baseUrl}/api/sessions`, { method: 'POST', body: form })
    return (await raiseForStatus(resp)).json()
  }

  getFacets(sessionId: string, lang: string): Promise<FacetsResponse> {
    return this.json(`/api/sessions/${sessionId}/facets`, { lang })
  }

  getView(sessionId: string, p: ViewParams): Promise<ViewResponse> {
    return this.json(`/api/sessions/${sessionId}/view`, viewQuery(p, 'view'))
  }

  getTable(sessionId: string, p: ViewParams): Promise<TableResponse> {
    return this.json(`/api/sessions/${sessionId}/view`, viewQuery(p, 'table'))
  }

  async getSvg(sessionId: string, p: ViewParams, layout: string): Promise<string> {
    const params = { ...viewQuery(p, 'svg'), layout }
    return (await this.get(`/api/sessions/${sessionId}/view`, params)).text()
  }

  async getDocument(sessionId: string, docId: string): Promise<string> {
    const path = `/api/sessions/${sessionId}/documents/${encodeURIComponent(docId)}`
    return (await this.get(path)).text()
  }

  getLanguages(): Promise<string[]> {
    return this.json('/api/meta/languages')
  }
}
