import { ApiClient, ApiError } from './api.js'
import { App } from './app.js'

function showUploadForm(host: HTMLElement, api: ApiClient, app: App): void {
  const form = document.createElement('div')
  form.className = 'upload-form'
  form.innerHTML = `
    <h2>Start a session</h2>
    <label>RDF file <input type="file" class="rdf-file"></label>
    <label>Format
      <select class="rdf-format">
        <option value="turtle">Turtle</option>
        <option value="ntriples">N-Triples</option>
      </select>
    </label>
    <label>Source documents <input type="file" class="doc-files" multiple></label>
    <button class="create-session">Explore</button>
    <p class="upload-error" hidden></p>`
  host.appendChild(form)

  const error = form.querySelector<HTMLElement>('.upload-error')!
  form.querySelector('.create-session')!.addEventListener('click', async () => {
    const rdf = form.querySelector<HTMLInputElement>('.rdf-file')!.files?.[0]
    if (!rdf) {
      error.textContent = 'Pick an RDF file first.'
      error.hidden = false
      return
    }
    const format = form.querySelector<HTMLSelectElement>('.rdf-format')!.value
    const docs = [...(form.querySelector<HTMLInputElement>('.doc-files')!.files ?? [])]
    try {
      const session = await api.createSession(rdf, format, docs)
      const url = new URL(location.href)
      url.searchParams.set('session', session.id)
      history.replaceState(null, '', url)
      form.remove()
      app.mount(host)
      await app.start(session.id)
    } catch (err) {
      error.textContent = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err)
      error.hidden = false
    }
  })
}

const root = document.getElementById('app')
if (root !== null) {
  const api = new ApiClient()
  const app = new App(api)
  const sessionId = new URLSearchParams(location.search).get('session')
  if (sessionId !== null) {
    app.mount(root)
    void app.start(sessionId)
  } else {
    showUploadForm(root, api, app)
  }
}
