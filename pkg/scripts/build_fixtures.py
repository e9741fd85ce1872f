#!/usr/bin/env python3
"""Regenerate the bundled lexical fixtures (lexicon.tsv, stopwords.txt,
categories.tsv) under src/newscaster/data/.

The lexicon is a hand-curated Spanish vocabulary with regular inflection
rules plus explicit overrides for the irregular verbs the dialogue engine
actually needs.  Run from the repo root:

    python scripts/build_fixtures.py
"""

from __future__ import annotations

from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "newscaster" / "data"

# (lemma, gender, polarity, category) -- gender "m"/"f"; "mf" expands to the
# four-form m/f sg/pl table used for person nouns (amigo/amiga/amigos/amigas).
NOUNS = [
    ("noticia", "f", "-", "media"),
    ("periódico", "m", "-", "media"),
    ("radio", "f", "-", "media"),
    ("televisión", "f", "-", "media"),
    ("titular", "m", "-", "media"),
    ("reportaje", "m", "-", "media"),
    ("entrevista", "f", "-", "media"),
    ("prensa", "f", "-", "media"),
    ("parque", "m", "-", "place"),
    ("ciudad", "f", "-", "place"),
    ("pueblo", "m", "-", "place"),
    ("casa", "f", "-", "building"),
    ("calle", "f", "-", "place"),
    ("plaza", "f", "-", "place"),
    ("playa", "f", "-", "place"),
    ("montaña", "f", "-", "nature"),
    ("campo", "m", "-", "nature"),
    ("jardín", "m", "-", "place"),
    ("mercado", "m", "-", "building"),
    ("tienda", "f", "-", "building"),
    ("restaurante", "m", "-", "building"),
    ("museo", "m", "-", "building"),
    ("biblioteca", "f", "-", "building"),
    ("iglesia", "f", "-", "building"),
    ("hospital", "m", "-", "health"),
    ("residencia", "f", "-", "building"),
    ("escuela", "f", "-", "building"),
    ("universidad", "f", "-", "building"),
    ("galicia", "f", "-", "place"),
    ("españa", "f", "-", "place"),
    ("madrid", "f", "-", "place"),
    ("vigo", "m", "-", "place"),
    ("familia", "f", "-", "family"),
    ("persona", "f", "-", "person"),
    ("amigo", "mf", "-", "person"),
    ("hijo", "mf", "-", "family"),
    ("abuelo", "mf", "-", "family"),
    ("madre", "f", "-", "family"),
    ("padre", "m", "-", "family"),
    ("hermano", "mf", "-", "family"),
    ("vecino", "mf", "-", "person"),
    ("niño", "mf", "-", "person"),
    ("señor", "mf2", "-", "person"),
    ("gente", "f", "-", "person"),
    ("médico", "mf", "-", "health"),
    ("enfermero", "mf", "-", "health"),
    ("profesor", "mf2", "-", "person"),
    ("doctor", "mf2", "-", "health"),
    ("salud", "f", "-", "health"),
    ("enfermedad", "f", "negative", "health"),
    ("medicina", "f", "-", "health"),
    ("pastilla", "f", "-", "health"),
    ("dolor", "m", "negative", "health"),
    ("gripe", "f", "negative", "health"),
    ("vacuna", "f", "-", "health"),
    ("corazón", "m", "-", "body"),
    ("cuerpo", "m", "-", "body"),
    ("ojo", "m", "-", "body"),
    ("mano", "f", "-", "body"),
    ("cabeza", "f", "-", "body"),
    ("pierna", "f", "-", "body"),
    ("teléfono", "m", "-", "technology"),
    ("móvil", "m", "-", "technology"),
    ("ordenador", "m", "-", "technology"),
    ("internet", "m", "-", "technology"),
    ("aplicación", "f", "-", "technology"),
    ("pantalla", "f", "-", "technology"),
    ("botón", "m", "-", "object"),
    ("mensaje", "m", "-", "communication"),
    ("correo", "m", "-", "communication"),
    ("red", "f", "-", "technology"),
    ("robot", "m", "-", "technology"),
    ("máquina", "f", "-", "technology"),
    ("coche", "m", "-", "transport"),
    ("autobús", "m", "-", "transport"),
    ("tren", "m", "-", "transport"),
    ("avión", "m", "-", "transport"),
    ("bicicleta", "f", "-", "transport"),
    ("barco", "m", "-", "transport"),
    ("viaje", "m", "-", "leisure"),
    ("camino", "m", "-", "place"),
    ("carretera", "f", "-", "transport"),
    ("estación", "f", "-", "transport"),
    ("billete", "m", "-", "transport"),
    ("deporte", "m", "-", "sport"),
    ("fútbol", "m", "-", "sport"),
    ("partido", "m", "-", "sport"),
    ("equipo", "m", "-", "sport"),
    ("juego", "m", "-", "leisure"),
    ("carta", "f", "-", "leisure"),
    ("paseo", "m", "-", "leisure"),
    ("baile", "m", "-", "leisure"),
    ("música", "f", "-", "music"),
    ("canción", "f", "-", "music"),
    ("cine", "m", "-", "leisure"),
    ("película", "f", "-", "leisure"),
    ("teatro", "m", "-", "leisure"),
    ("libro", "m", "-", "leisure"),
    ("lectura", "f", "-", "leisure"),
    ("fiesta", "f", "-", "leisure"),
    ("excursión", "f", "-", "leisure"),
    ("pesca", "f", "-", "leisure"),
    ("huerto", "m", "-", "nature"),
    ("comida", "f", "-", "food"),
    ("pan", "m", "-", "food"),
    ("fruta", "f", "-", "food"),
    ("verdura", "f", "-", "food"),
    ("pescado", "m", "-", "food"),
    ("carne", "f", "-", "food"),
    ("sopa", "f", "-", "food"),
    ("café", "m", "-", "drink"),
    ("leche", "f", "-", "drink"),
    ("agua", "f", "-", "drink"),
    ("vino", "m", "-", "drink"),
    ("cena", "f", "-", "food"),
    ("desayuno", "m", "-", "food"),
    ("receta", "f", "-", "food"),
    ("día", "m", "-", "time"),
    ("semana", "f", "-", "time"),
    ("mes", "m", "-", "time"),
    ("año", "m", "-", "time"),
    ("hora", "f", "-", "time"),
    ("mañana", "f", "-", "time"),
    ("tarde", "f", "-", "time"),
    ("noche", "f", "-", "time"),
    ("tiempo", "m", "-", "time"),
    ("sol", "m", "-", "weather"),
    ("lluvia", "f", "-", "weather"),
    ("viento", "m", "-", "weather"),
    ("nieve", "f", "-", "weather"),
    ("invierno", "m", "-", "time"),
    ("verano", "m", "-", "time"),
    ("primavera", "f", "-", "time"),
    ("otoño", "m", "-", "time"),
    ("clima", "m", "-", "weather"),
    ("trabajo", "m", "-", "work"),
    ("empleo", "m", "-", "work"),
    ("oficina", "f", "-", "work"),
    ("dinero", "m", "-", "money"),
    ("pensión", "f", "-", "money"),
    ("jubilación", "f", "-", "work"),
    ("ayuda", "f", "-", "society"),
    ("servicio", "m", "-", "society"),
    ("impuesto", "m", "-", "money"),
    ("precio", "m", "-", "money"),
    ("euro", "m", "-", "money"),
    ("banco", "m", "-", "money"),
    ("empresa", "f", "-", "work"),
    ("obra", "f", "-", "work"),
    ("gobierno", "m", "-", "politics"),
    ("ley", "f", "-", "politics"),
    ("derecho", "m", "-", "politics"),
    ("sociedad", "f", "-", "society"),
    ("comunidad", "f", "-", "society"),
    ("ayuntamiento", "m", "-", "politics"),
    ("alcalde", "m", "-", "politics"),
    ("ministro", "mf", "-", "politics"),
    ("presidente", "m", "-", "politics"),
    ("política", "f", "-", "politics"),
    ("elección", "f", "-", "politics"),
    ("reunión", "f", "-", "society"),
    ("asociación", "f", "-", "society"),
    ("programa", "m", "-", "media"),
    ("proyecto", "m", "-", "work"),
    ("plan", "m", "-", "abstract"),
    ("medida", "f", "-", "abstract"),
    ("accesibilidad", "f", "-", "society"),
    ("barrera", "f", "-", "object"),
    ("rampa", "f", "-", "object"),
    ("silla", "f", "-", "object"),
    ("ruido", "m", "negative", "abstract"),
    ("limpieza", "f", "-", "society"),
    ("seguridad", "f", "-", "society"),
    ("transporte", "m", "-", "transport"),
    ("tecnología", "f", "-", "technology"),
    ("medioambiente", "m", "-", "nature"),
    ("naturaleza", "f", "-", "nature"),
    ("río", "m", "-", "nature"),
    ("mar", "m", "-", "nature"),
    ("árbol", "m", "-", "nature"),
    ("flor", "f", "-", "nature"),
    ("animal", "m", "-", "animal"),
    ("perro", "m", "-", "animal"),
    ("gato", "m", "-", "animal"),
    ("pájaro", "m", "-", "animal"),
    ("caballo", "m", "-", "animal"),
    ("vaca", "f", "-", "animal"),
    ("oveja", "f", "-", "animal"),
    ("pez", "m", "-", "animal"),
    ("bosque", "m", "-", "nature"),
    ("basura", "f", "negative", "nature"),
    ("reciclaje", "m", "-", "nature"),
    ("energía", "f", "-", "technology"),
    ("luz", "f", "-", "object"),
    ("gas", "m", "-", "object"),
    ("cosa", "f", "-", "object"),
    ("vida", "f", "-", "abstract"),
    ("mundo", "m", "-", "place"),
    ("historia", "f", "-", "abstract"),
    ("palabra", "f", "-", "communication"),
    ("pregunta", "f", "-", "communication"),
    ("respuesta", "f", "-", "communication"),
    ("opinión", "f", "-", "communication"),
    ("idea", "f", "-", "abstract"),
    ("problema", "m", "negative", "abstract"),
    ("solución", "f", "positive", "abstract"),
    ("razón", "f", "-", "abstract"),
    ("verdad", "f", "-", "abstract"),
    ("mentira", "f", "negative", "abstract"),
    ("suerte", "f", "positive", "abstract"),
    ("miedo", "m", "negative", "emotion"),
    ("pena", "f", "negative", "emotion"),
    ("alegría", "f", "positive", "emotion"),
    ("amor", "m", "positive", "emotion"),
    ("esperanza", "f", "positive", "emotion"),
    ("desastre", "m", "negative", "abstract"),
    ("accidente", "m", "negative", "abstract"),
    ("incendio", "m", "negative", "abstract"),
    ("robo", "m", "negative", "abstract"),
    ("crisis", "f", "negative", "abstract"),
    ("guerra", "f", "negative", "politics"),
    ("paz", "f", "positive", "politics"),
    ("premio", "m", "positive", "abstract"),
    ("éxito", "m", "positive", "abstract"),
    ("mejora", "f", "positive", "abstract"),
    ("fallo", "m", "negative", "abstract"),
    ("error", "m", "negative", "abstract"),
    ("queja", "f", "negative", "communication"),
    ("riesgo", "m", "negative", "abstract"),
    ("peligro", "m", "negative", "abstract"),
    ("daño", "m", "negative", "abstract"),
    ("sueño", "m", "-", "abstract"),
    ("recuerdo", "m", "-", "abstract"),
    ("foto", "f", "-", "object"),
    ("regalo", "m", "positive", "object"),
    ("sorpresa", "f", "-", "emotion"),
    ("visita", "f", "-", "society"),
    ("llamada", "f", "-", "communication"),
    ("cita", "f", "-", "society"),
    ("consejo", "m", "-", "communication"),
    ("costumbre", "f", "-", "abstract"),
    ("ejercicio", "m", "-", "sport"),
    ("memoria", "f", "-", "abstract"),
    ("atención", "f", "-", "abstract"),
    ("cuidado", "m", "-", "health"),
    ("cariño", "m", "positive", "emotion"),
    ("color", "m", "-", "object"),
    ("mascota", "f", "-", "animal"),
    ("compra", "f", "-", "leisure"),
    ("abuela", "f", "-", "family"),
    ("nieto", "mf", "-", "family"),
    ("taller", "m", "-", "work"),
    ("curso", "m", "-", "education"),
    ("clase", "f", "-", "education"),
    ("alumno", "mf", "-", "education"),
    ("examen", "m", "-", "education"),
    ("centro", "m", "-", "building"),
    ("zona", "f", "-", "place"),
    ("barrio", "m", "-", "place"),
    ("edificio", "m", "-", "building"),
    ("puerta", "f", "-", "object"),
    ("ventana", "f", "-", "object"),
    ("mesa", "f", "-", "object"),
    ("cocina", "f", "-", "building"),
    ("ropa", "f", "-", "object"),
    ("zapato", "m", "-", "object"),
    ("abrigo", "m", "-", "object"),
    ("victoria", "f", "positive", "sport"),
    ("voluntario", "mf", "-", "society"),
    ("campaña", "f", "-", "society"),
    ("horario", "m", "-", "time"),
    ("línea", "f", "-", "transport"),
    ("presupuesto", "m", "-", "money"),
    ("semáforo", "m", "-", "transport"),
    ("trámite", "m", "-", "society"),
    ("aficionado", "mf", "-", "sport"),
    ("poema", "m", "-", "art"),
    ("subida", "f", "-", "money"),
]

# (lemma, conjugation class or "irr", polarity)
VERBS = [
    ("hablar", "ar", "-"),
    ("escuchar", "ar", "-"),
    ("mirar", "ar", "-"),
    ("caminar", "ar", "-"),
    ("comprar", "ar", "-"),
    ("vender", "er", "-"),
    ("pagar", "ar", "-"),
    ("cocinar", "ar", "-"),
    ("comer", "er", "-"),
    ("beber", "er", "-"),
    ("vivir", "ir", "-"),
    ("escribir", "ir", "-"),
    ("llamar", "ar", "-"),
    ("ayudar", "ar", "-"),
    ("cuidar", "ar", "-"),
    ("visitar", "ar", "-"),
    ("pasear", "ar", "-"),
    ("descansar", "ar", "-"),
    ("trabajar", "ar", "-"),
    ("estudiar", "ar", "-"),
    ("aprender", "er", "-"),
    ("enseñar", "ar", "-"),
    ("olvidar", "ar", "-"),
    ("esperar", "ar", "-"),
    ("buscar", "ar", "-"),
    ("llevar", "ar", "-"),
    ("dejar", "ar", "-"),
    ("tomar", "ar", "-"),
    ("usar", "ar", "-"),
    ("necesitar", "ar", "-"),
    ("cambiar", "ar", "-"),
    ("mejorar", "ar", "positive"),
    ("empeorar", "ar", "negative"),
    ("abrir", "ir", "-"),
    ("subir", "ir", "-"),
    ("bajar", "ar", "-"),
    ("entrar", "ar", "-"),
    ("llegar", "ar", "-"),
    ("pasar", "ar", "-"),
    ("terminar", "ar", "-"),
    ("acabar", "ar", "-"),
    ("preguntar", "ar", "-"),
    ("responder", "er", "-"),
    ("contestar", "ar", "-"),
    ("explicar", "ar", "-"),
    ("presentar", "ar", "-"),
    ("anunciar", "ar", "-"),
    ("publicar", "ar", "-"),
    ("informar", "ar", "-"),
    ("opinar", "ar", "-"),
    ("considerar", "ar", "-"),
    ("encantar", "ar", "positive"),
    ("interesar", "ar", "-"),
    ("aburrir", "ir", "negative"),
    ("molestar", "ar", "negative"),
    ("preocupar", "ar", "negative"),
    ("alegrar", "ar", "positive"),
    ("disfrutar", "ar", "positive"),
    ("llorar", "ar", "negative"),
    ("cantar", "ar", "-"),
    ("bailar", "ar", "-"),
    ("tocar", "ar", "-"),
    ("ganar", "ar", "-"),
    ("gustar", "ar", "positive"),
    ("odiar", "ar", "negative"),
    ("recibir", "ir", "-"),
    ("organizar", "ar", "-"),
    ("celebrar", "ar", "-"),
    ("ampliar", "ar", "-"),
    ("confirmar", "ar", "-"),
    ("invitar", "ar", "-"),
    ("atender", "er", "-"),
    ("permitir", "ir", "-"),
    ("conversar", "ar", "-"),
    ("ser", "irr", "-"),
    ("estar", "irr", "-"),
    ("ir", "irr", "-"),
    ("parecer", "irr", "-"),
    ("pensar", "irr", "-"),
    ("creer", "irr", "-"),
    ("querer", "irr", "positive"),
    ("poder", "irr", "-"),
    ("hacer", "irr", "-"),
    ("tener", "irr", "-"),
    ("decir", "irr", "-"),
    ("saber", "irr", "-"),
    ("ver", "irr", "-"),
    ("dar", "irr", "-"),
    ("venir", "irr", "-"),
    ("salir", "irr", "-"),
    ("jugar", "irr", "-"),
    ("dormir", "irr", "-"),
    ("sentir", "irr", "-"),
    ("encontrar", "irr", "-"),
    ("entender", "irr", "-"),
    ("contar", "irr", "-"),
    ("empezar", "irr", "-"),
    ("volver", "irr", "-"),
    ("leer", "irr", "-"),
    ("perder", "irr", "negative"),
    ("recordar", "irr", "-"),
    ("mostrar", "irr", "-"),
    ("cerrar", "irr", "-"),
    ("reír", "irr", "positive"),
    ("oír", "irr", "-"),
]

# present 1sg..3pl, then 3sg past, 3sg future
IRREGULAR = {
    "ser": ("soy", "eres", "es", "somos", "sois", "son", "fue", "será"),
    "estar": ("estoy", "estás", "está", "estamos", "estáis", "están", "estuvo", "estará"),
    "ir": ("voy", "vas", "va", "vamos", "vais", "van", "fue", "irá"),
    "parecer": ("parezco", "pareces", "parece", "parecemos", "parecéis", "parecen", "pareció", "parecerá"),
    "pensar": ("pienso", "piensas", "piensa", "pensamos", "pensáis", "piensan", "pensó", "pensará"),
    "creer": ("creo", "crees", "cree", "creemos", "creéis", "creen", "creyó", "creerá"),
    "querer": ("quiero", "quieres", "quiere", "queremos", "queréis", "quieren", "quiso", "querrá"),
    "poder": ("puedo", "puedes", "puede", "podemos", "podéis", "pueden", "pudo", "podrá"),
    "hacer": ("hago", "haces", "hace", "hacemos", "hacéis", "hacen", "hizo", "hará"),
    "tener": ("tengo", "tienes", "tiene", "tenemos", "tenéis", "tienen", "tuvo", "tendrá"),
    "decir": ("digo", "dices", "dice", "decimos", "decís", "dicen", "dijo", "dirá"),
    "saber": ("sé", "sabes", "sabe", "sabemos", "sabéis", "saben", "supo", "sabrá"),
    "ver": ("veo", "ves", "ve", "vemos", "veis", "ven", "vio", "verá"),
    "dar": ("doy", "das", "da", "damos", "dais", "dan", "dio", "dará"),
    "venir": ("vengo", "vienes", "viene", "venimos", "venís", "vienen", "vino", "vendrá"),
    "salir": ("salgo", "sales", "sale", "salimos", "salís", "salen", "salió", "saldrá"),
    "jugar": ("juego", "juegas", "juega", "jugamos", "jugáis", "juegan", "jugó", "jugará"),
    "dormir": ("duermo", "duermes", "duerme", "dormimos", "dormís", "duermen", "durmió", "dormirá"),
    "sentir": ("siento", "sientes", "siente", "sentimos", "sentís", "sienten", "sintió", "sentirá"),
    "encontrar": ("encuentro", "encuentras", "encuentra", "encontramos", "encontráis", "encuentran", "encontró", "encontrará"),
    "entender": ("entiendo", "entiendes", "entiende", "entendemos", "entendéis", "entienden", "entendió", "entenderá"),
    "contar": ("cuento", "cuentas", "cuenta", "contamos", "contáis", "cuentan", "contó", "contará"),
    "empezar": ("empiezo", "empiezas", "empieza", "empezamos", "empezáis", "empiezan", "empezó", "empezará"),
    "volver": ("vuelvo", "vuelves", "vuelve", "volvemos", "volvéis", "vuelven", "volvió", "volverá"),
    "leer": ("leo", "lees", "lee", "leemos", "leéis", "leen", "leyó", "leerá"),
    "perder": ("pierdo", "pierdes", "pierde", "perdemos", "perdéis", "pierden", "perdió", "perderá"),
    "recordar": ("recuerdo", "recuerdas", "recuerda", "recordamos", "recordáis", "recuerdan", "recordó", "recordará"),
    "mostrar": ("muestro", "muestras", "muestra", "mostramos", "mostráis", "muestran", "mostró", "mostrará"),
    "cerrar": ("cierro", "cierras", "cierra", "cerramos", "cerráis", "cierran", "cerró", "cerrará"),
    "reír": ("río", "ríes", "ríe", "reímos", "reís", "ríen", "rio", "reirá"),
    "oír": ("oigo", "oyes", "oye", "oímos", "oís", "oyen", "oyó", "oirá"),
}

# (lemma, inflection "4"=o/a/os/as, "2"=sg/pl invariant gender, polarity)
ADJECTIVES = [
    ("bueno", "4", "positive"),
    ("malo", "4", "negative"),
    ("grande", "2", "-"),
    ("pequeño", "4", "-"),
    ("nuevo", "4", "-"),
    ("viejo", "4", "-"),
    ("joven", "2", "-"),
    ("mayor", "2", "-"),
    ("mejor", "2", "positive"),
    ("peor", "2", "negative"),
    ("feliz", "2", "positive"),
    ("triste", "2", "negative"),
    ("alegre", "2", "positive"),
    ("contento", "4", "positive"),
    ("enfadado", "4", "negative"),
    ("preocupado", "4", "negative"),
    ("tranquilo", "4", "positive"),
    ("nervioso", "4", "negative"),
    ("cansado", "4", "negative"),
    ("enfermo", "4", "negative"),
    ("sano", "4", "positive"),
    ("fuerte", "2", "-"),
    ("débil", "2", "negative"),
    ("rápido", "4", "-"),
    ("lento", "4", "-"),
    ("fácil", "2", "-"),
    ("difícil", "2", "negative"),
    ("importante", "2", "-"),
    ("interesante", "2", "positive"),
    ("aburrido", "4", "negative"),
    ("divertido", "4", "positive"),
    ("bonito", "4", "positive"),
    ("precioso", "4", "positive"),
    ("feo", "4", "negative"),
    ("hermoso", "4", "positive"),
    ("barato", "4", "-"),
    ("caro", "4", "-"),
    ("genial", "2", "positive"),
    ("fantástico", "4", "positive"),
    ("estupendo", "4", "positive"),
    ("maravilloso", "4", "positive"),
    ("excelente", "2", "positive"),
    ("perfecto", "4", "positive"),
    ("magnífico", "4", "positive"),
    ("increíble", "2", "positive"),
    ("horrible", "2", "negative"),
    ("terrible", "2", "negative"),
    ("fatal", "2", "negative"),
    ("grave", "2", "negative"),
    ("peligroso", "4", "negative"),
    ("seguro", "4", "-"),
    ("amable", "2", "positive"),
    ("simpático", "4", "positive"),
    ("antipático", "4", "negative"),
    ("cariñoso", "4", "positive"),
    ("agradable", "2", "positive"),
    ("desagradable", "2", "negative"),
    ("optimista", "2", "positive"),
    ("pesimista", "2", "negative"),
    ("famoso", "4", "-"),
    ("público", "4", "-"),
    ("privado", "4", "-"),
    ("social", "2", "-"),
    ("local", "2", "-"),
    ("nacional", "2", "-"),
    ("internacional", "2", "-"),
    ("moderno", "4", "-"),
    ("antiguo", "4", "-"),
    ("largo", "4", "-"),
    ("corto", "4", "-"),
    ("alto", "4", "-"),
    ("caliente", "2", "-"),
    ("frío", "4", "-"),
    ("limpio", "4", "positive"),
    ("sucio", "4", "negative"),
    ("lleno", "4", "-"),
    ("vacío", "4", "-"),
    ("abierto", "4", "-"),
    ("cerrado", "4", "-"),
    ("libre", "2", "-"),
    ("ocupado", "4", "-"),
    ("sencillo", "4", "-"),
    ("complicado", "4", "negative"),
    ("necesario", "4", "-"),
    ("posible", "2", "-"),
    ("imposible", "2", "negative"),
    ("útil", "2", "positive"),
    ("inútil", "2", "negative"),
    ("sabroso", "4", "positive"),
    ("rico", "4", "positive"),
    ("saludable", "2", "positive"),
    ("accesible", "2", "positive"),
    ("digital", "2", "-"),
    ("eléctrico", "4", "-"),
    ("económico", "4", "-"),
    ("verde", "2", "-"),
    ("rojo", "4", "-"),
    ("azul", "2", "-"),
    ("blanco", "4", "-"),
    ("negro", "4", "-"),
    ("claro", "4", "-"),
    ("oscuro", "4", "-"),
    ("favorito", "4", "-"),
]

# (lemma, polarity)
ADVERBS = [
    ("no", "denier"),
    ("nunca", "denier"),
    ("jamás", "denier"),
    ("tampoco", "denier"),
    ("bien", "positive"),
    ("mal", "negative"),
    ("fenomenal", "positive"),
    ("estupendamente", "positive"),
    ("perfectamente", "positive"),
    ("regular", "-"),
    ("hoy", "-"),
    ("ayer", "-"),
    ("ahora", "-"),
    ("luego", "-"),
    ("pronto", "-"),
    ("siempre", "-"),
    ("aquí", "-"),
    ("allí", "-"),
    ("cerca", "-"),
    ("lejos", "-"),
    ("casi", "-"),
    ("todavía", "-"),
    ("además", "-"),
    ("quizás", "-"),
    ("despacio", "-"),
]

# determiners as (lemma, forms[(surface, gender, number)])
DETERMINERS = [
    ("el", [("el", "m", "sg"), ("la", "f", "sg"), ("los", "m", "pl"), ("las", "f", "pl")]),
    ("un", [("un", "m", "sg"), ("una", "f", "sg"), ("unos", "m", "pl"), ("unas", "f", "pl")]),
    ("este", [("este", "m", "sg"), ("esta", "f", "sg"), ("estos", "m", "pl"), ("estas", "f", "pl")]),
    ("ese", [("ese", "m", "sg"), ("esa", "f", "sg"), ("esos", "m", "pl"), ("esas", "f", "pl")]),
    ("aquel", [("aquel", "m", "sg"), ("aquella", "f", "sg"), ("aquellos", "m", "pl"), ("aquellas", "f", "pl")]),
    ("mi", [("mi", "-", "sg"), ("mis", "-", "pl")]),
    ("tu", [("tu", "-", "sg"), ("tus", "-", "pl")]),
    ("su", [("su", "-", "sg"), ("sus", "-", "pl")]),
    ("nuestro", [("nuestro", "m", "sg"), ("nuestra", "f", "sg"), ("nuestros", "m", "pl"), ("nuestras", "f", "pl")]),
    ("mucho", [("mucho", "m", "sg"), ("mucha", "f", "sg"), ("muchos", "m", "pl"), ("muchas", "f", "pl")]),
    ("poco", [("poco", "m", "sg"), ("poca", "f", "sg"), ("pocos", "m", "pl"), ("pocas", "f", "pl")]),
    ("todo", [("todo", "m", "sg"), ("toda", "f", "sg"), ("todos", "m", "pl"), ("todas", "f", "pl")]),
    ("otro", [("otro", "m", "sg"), ("otra", "f", "sg"), ("otros", "m", "pl"), ("otras", "f", "pl")]),
    ("alguno", [("alguno", "m", "sg"), ("alguna", "f", "sg"), ("algunos", "m", "pl"), ("algunas", "f", "pl")]),
    ("cada", [("cada", "-", "sg")]),
    ("varios", [("varios", "m", "pl"), ("varias", "f", "pl")]),
]

PREPOSITIONS = ["a", "ante", "bajo", "con", "contra", "de", "desde", "durante",
                "en", "entre", "hacia", "hasta", "para", "por", "según", "sin",
                "sobre", "tras"]

CONJUNCTIONS = ["y", "e", "o", "u", "pero", "que", "si", "porque", "aunque",
                "como", "cuando", "mientras", "ni"]

# (lemma, forms[(surface, gender, number, person)])
PRONOUNS = [
    ("yo", [("yo", "-", "sg", "1")]),
    ("tú", [("tú", "-", "sg", "2")]),
    ("él", [("él", "m", "sg", "3")]),
    ("ella", [("ella", "f", "sg", "3")]),
    ("usted", [("usted", "-", "sg", "3")]),
    ("nosotros", [("nosotros", "m", "pl", "1"), ("nosotras", "f", "pl", "1")]),
    ("vosotros", [("vosotros", "m", "pl", "2"), ("vosotras", "f", "pl", "2")]),
    ("ellos", [("ellos", "m", "pl", "3")]),
    ("ellas", [("ellas", "f", "pl", "3")]),
    ("me", [("me", "-", "sg", "1")]),
    ("te", [("te", "-", "sg", "2")]),
    ("se", [("se", "-", "-", "3")]),
    ("nos", [("nos", "-", "pl", "1")]),
    ("os", [("os", "-", "pl", "2")]),
    ("le", [("le", "-", "sg", "3")]),
    ("les", [("les", "-", "pl", "3")]),
    ("esto", [("esto", "-", "sg", "3")]),
    ("eso", [("eso", "-", "sg", "3")]),
    ("alguien", [("alguien", "-", "sg", "3")]),
    ("nadie", [("nadie", "-", "sg", "3")]),
    ("algo", [("algo", "-", "sg", "3")]),
    ("nada", [("nada", "-", "sg", "3")]),
]

OTHERS = ["hola", "adiós", "gracias", "vale", "sí", "bueno"]

# NLTK-style Spanish stopword inventory.
STOPWORDS = """
de la que el en y a los del se las por un para con no una su al lo como más
pero sus le ya o este sí porque esta entre cuando muy sin sobre también me
hasta hay donde quien desde todo nos durante todos uno les ni contra otros
ese eso ante ellos e esto mí antes algunos qué unos yo otro otras otra él
tanto esa estos mucho quienes nada muchos cual poco ella estar estas algunas
algo nosotros mi mis tú te ti tu tus ellas nosotras vosotros vosotras os mío
mía míos mías tuyo tuya tuyos tuyas suyo suya suyos suyas nuestro nuestra
nuestros nuestras vuestro vuestra vuestros vuestras esos esas estoy estás
está estamos estáis están esté estés estemos estéis estén estaré estarás
estará estaremos estaréis estarán estaría estarías estaríamos estaríais
estarían estaba estabas estábamos estabais estaban estuve estuviste estuvo
estuvimos estuvisteis estuvieron estuviera estuvieras estuviéramos
estuvierais estuvieran estuviese estuvieses estuviésemos estuvieseis
estuviesen estando estado estada estados estadas estad he has ha hemos
habéis han haya hayas hayamos hayáis hayan habré habrás habrá habremos
habréis habrán habría habrías habríamos habríais habrían había habías
habíamos habíais habían hube hubiste hubo hubimos hubisteis hubieron hubiera
hubieras hubiéramos hubierais hubieran hubiese hubieses hubiésemos hubieseis
hubiesen habiendo habido habida habidos habidas soy eres es somos sois son
sea seas seamos seáis sean seré serás será seremos seréis serán sería serías
seríamos seríais serían era eras éramos erais eran fui fuiste fue fuimos
fuisteis fueron fuera fueras fuéramos fuerais fueran fuese fueses fuésemos
fueseis fuesen siendo sido tengo tienes tiene tenemos tenéis tienen tenga
tengas tengamos tengáis tengan tendré tendrás tendrá tendremos tendréis
tendrán tendría tendrías tendríamos tendríais tendrían tenía tenías teníamos
teníais tenían tuve tuviste tuvo tuvimos tuvisteis tuvieron tuviera tuvieras
tuviéramos tuvierais tuvieran tuviese tuvieses tuviésemos tuvieseis tuviesen
teniendo tenido tenida tenidos tenidas tened u
""".split()


def _noun_rows(lemma: str, gender: str, polarity: str) -> list[tuple]:
    if gender == "mf":
        # amigo -> amigo/amiga/amigos/amigas
        stem = lemma[:-1]
        return [
            (lemma, "m", "sg"),
            (stem + "a", "f", "sg"),
            (stem + "os", "m", "pl"),
            (stem + "as", "f", "pl"),
        ]
    if gender == "mf2":
        # profesor -> profesor/profesora/profesores/profesoras
        return [
            (lemma, "m", "sg"),
            (lemma + "a", "f", "sg"),
            (lemma + "es", "m", "pl"),
            (lemma + "as", "f", "pl"),
        ]
    plural = _pluralize(lemma)
    rows = [(lemma, gender, "sg")]
    if plural != lemma:
        rows.append((plural, gender, "pl"))
    return rows


PLURAL_OVERRIDES = {
    "crisis": "crisis",
    "internet": "internet",
    "examen": "exámenes",
    "galicia": "galicia",
    "españa": "españa",
    "madrid": "madrid",
    "vigo": "vigo",
}


def _pluralize(word: str) -> str:
    if word in PLURAL_OVERRIDES:
        return PLURAL_OVERRIDES[word]
    if word.endswith("z"):
        return word[:-1] + "ces"
    if word.endswith(("s", "x")) and word[-2] not in "aeiouáéíóú":
        return word
    if word[-1] in "aeiou":
        return word + "s"
    if word[-1] in "áéíóú":
        return word + "s"
    if word.endswith("s"):  # mes -> meses, autobús -> autobuses
        base = word
        if word.endswith("ús"):
            base = word[:-2] + "us"
        elif word.endswith("és"):
            base = word[:-2] + "es"
        return base + "es"
    base = word
    if word.endswith("ión"):
        base = word[:-3] + "ion"
    elif word.endswith("ín"):
        base = word[:-2] + "in"
    elif word.endswith("ón"):
        base = word[:-2] + "on"
    elif word.endswith("án"):
        base = word[:-2] + "an"
    return base + "es"


def _regular_present(lemma: str, cls: str) -> tuple[str, ...]:
    stem = lemma[:-2]
    if cls == "ar":
        ends = ("o", "as", "a", "amos", "áis", "an")
    elif cls == "er":
        ends = ("o", "es", "e", "emos", "éis", "en")
    else:
        ends = ("o", "es", "e", "imos", "ís", "en")
    return tuple(stem + e for e in ends)


def _verb_rows(lemma: str, cls: str) -> list[tuple]:
    if cls == "irr":
        p1, p2, p3, pl1, pl2, pl3, past3, fut3 = IRREGULAR[lemma]
    else:
        p1, p2, p3, pl1, pl2, pl3 = _regular_present(lemma, cls)
        stem = lemma[:-2]
        past3 = stem + ("ó" if cls == "ar" else "ió")
        fut3 = lemma + "á"
    rows = [
        (lemma, "-", "-", "-", "-"),  # infinitive / citation form
        (p1, "-", "sg", "1", "present"),
        (p2, "-", "sg", "2", "present"),
        (p3, "-", "sg", "3", "present"),
        (pl1, "-", "pl", "1", "present"),
        (pl2, "-", "pl", "2", "present"),
        (pl3, "-", "pl", "3", "present"),
        (past3, "-", "sg", "3", "past"),
        (fut3, "-", "sg", "3", "future"),
    ]
    return rows


def _adjective_rows(lemma: str, kind: str) -> list[tuple]:
    if kind == "4":
        stem = lemma[:-1]
        return [
            (lemma, "m", "sg"),
            (stem + "a", "f", "sg"),
            (stem + "os", "m", "pl"),
            (stem + "as", "f", "pl"),
        ]
    plural = _pluralize(lemma)
    rows = [(lemma, "-", "sg")]
    if plural != lemma:
        rows.append((plural, "-", "pl"))
    return rows


def build_lexicon_tsv() -> str:
    out = ["# lemma\tpos\tsurface\tgender\tnumber\tperson\ttense\tpolarity"]

    def emit(lemma, pos, surface, g="-", n="-", p="-", t="-", pol="-"):
        out.append(f"{lemma}\t{pos}\t{surface}\t{g}\t{n}\t{p}\t{t}\t{pol}")

    for lemma, gender, pol, _cat in NOUNS:
        for surface, g, n in _noun_rows(lemma, gender, pol):
            emit(lemma, "noun", surface, g, n, "-", "-", pol)
    for lemma, cls, pol in VERBS:
        for surface, g, n, p, t in _verb_rows(lemma, cls):
            emit(lemma, "verb", surface, g, n, p, t, pol)
    for lemma, kind, pol in ADJECTIVES:
        for row in _adjective_rows(lemma, kind):
            surface, g, n = row
            emit(lemma, "adjective", surface, g, n, "-", "-", pol)
    for lemma, pol in ADVERBS:
        emit(lemma, "adverb", lemma, pol="-" if pol == "-" else pol)
    for lemma, forms in DETERMINERS:
        for surface, g, n in forms:
            emit(lemma, "determiner", surface, g, n)
    for lemma in PREPOSITIONS:
        emit(lemma, "preposition", lemma)
    for lemma in CONJUNCTIONS:
        emit(lemma, "conjunction", lemma)
    for lemma, forms in PRONOUNS:
        for surface, g, n, p in forms:
            emit(lemma, "pronoun", surface, g, n, p)
    for lemma in OTHERS:
        emit(lemma, "other", lemma)
    return "\n".join(out) + "\n"


def build_categories_tsv() -> str:
    lines = ["# lemma\tcategory"]
    for lemma, _gender, _pol, cat in NOUNS:
        lines.append(f"{lemma}\t{cat}")
    return "\n".join(lines) + "\n"


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "lexicon.tsv").write_text(build_lexicon_tsv(), encoding="utf-8")
    (DATA / "stopwords.txt").write_text(
        "\n".join(STOPWORDS) + "\n", encoding="utf-8"
    )
    (DATA / "categories.tsv").write_text(build_categories_tsv(), encoding="utf-8")
    n_entries = len(NOUNS) + len(VERBS) + len(ADJECTIVES) + len(ADVERBS) + \
        len(DETERMINERS) + len(PREPOSITIONS) + len(CONJUNCTIONS) + \
        len(PRONOUNS) + len(OTHERS)
    print(f"wrote lexicon ({n_entries} entries), "
          f"{len(STOPWORDS)} stopwords, {len(NOUNS)} categorised lemmas")


if __name__ == "__main__":
    main()
